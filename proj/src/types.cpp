#include "qrtd/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qrtd {

std::size_t path_segment_index(const CovariatePath& path, double t) {
  if (t < 0.0) throw std::domain_error("path_value: negative time");
  // last breakpoint <= t; breakpoints[0] == 0 so the result is well defined
  auto it = std::upper_bound(path.breakpoints.begin(), path.breakpoints.end(), t);
  return static_cast<std::size_t>(it - path.breakpoints.begin()) - 1;
}

const std::vector<double>& path_value(const CovariatePath& path, double t) {
  if (path.values.empty()) throw std::invalid_argument("path_value: empty path");
  return path.values[path_segment_index(path, t)];
}

namespace {

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

std::vector<Violation> validate(const Dataset& dataset) {
  std::vector<Violation> out;
  if (dataset.subjects.empty()) {
    out.push_back({Violation::npos, "dataset empty"});
    return out;
  }
  const std::size_t dim = dataset.dim();
  std::size_t n_events = 0;
  for (std::size_t i = 0; i < dataset.subjects.size(); ++i) {
    const Subject& s = dataset.subjects[i];
    if (!(s.y >= 0.0) || !std::isfinite(s.y))
      out.push_back({i, "follow-up time not a finite nonnegative number"});
    if (s.event) ++n_events;
    if (s.z.empty() || s.z.front() != 1.0)
      out.push_back({i, "instrument intercept coordinate is not 1"});
    if (!all_finite(s.z)) out.push_back({i, "instrument has non-finite coordinate"});
    if (s.z.size() != dim) out.push_back({i, "instrument dimension differs from dataset"});

    const CovariatePath& p = s.path;
    if (p.breakpoints.empty() || p.breakpoints.front() != 0.0)
      out.push_back({i, "path breakpoints must start at 0"});
    for (std::size_t k = 1; k < p.breakpoints.size(); ++k)
      if (!(p.breakpoints[k] > p.breakpoints[k - 1]))
        out.push_back({i, "path breakpoints not strictly increasing"});
    if (p.values.size() != p.breakpoints.size())
      out.push_back({i, "path has mismatched breakpoint/value counts"});
    for (const auto& v : p.values) {
      if (v.size() != dim) out.push_back({i, "path segment dimension differs from instrument"});
      if (v.empty() || v.front() != 1.0)
        out.push_back({i, "path segment intercept coordinate is not 1"});
      if (!all_finite(v)) out.push_back({i, "path segment has non-finite value"});
    }
  }
  if (n_events == 0) out.push_back({Violation::npos, "no events"});
  return out;
}

void require_valid(const Dataset& dataset) {
  const auto violations = validate(dataset);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid dataset:";
  for (const auto& v : violations) {
    msg << ' ';
    if (v.subject != Violation::npos) msg << "[subject " << v.subject << "] ";
    msg << v.what << ';';
  }
  throw std::invalid_argument(msg.str());
}

}  // namespace qrtd
