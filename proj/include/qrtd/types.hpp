#ifndef QRTD_TYPES_HPP_
#define QRTD_TYPES_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace qrtd {

// Piecewise-constant covariate process. Segment k holds on
// [breakpoints[k], breakpoints[k+1]) and the last segment extends to
// +infinity. Every segment value carries a leading constant-1 coordinate.
struct CovariatePath {
  std::vector<double> breakpoints;            // strictly increasing, first is 0
  std::vector<std::vector<double>> values;    // one vector per segment

  std::size_t dim() const { return values.empty() ? 0 : values.front().size(); }
};

// Returns the index of the segment whose half-open interval contains t.
std::size_t path_segment_index(const CovariatePath& path, double t);

// Evaluates the path at time t (t >= 0, domain error otherwise).
const std::vector<double>& path_value(const CovariatePath& path, double t);

// One censored observation: follow-up time, event indicator, covariate
// process and time-invariant instrument vector (leading coordinate 1).
struct Subject {
  double y = 0.0;
  bool event = false;
  CovariatePath path;
  std::vector<double> z;
};

struct Dataset {
  std::vector<Subject> subjects;

  std::size_t size() const { return subjects.size(); }
  std::size_t dim() const { return subjects.empty() ? 0 : subjects.front().z.size(); }
};

struct Violation {
  std::size_t subject;   // index, or npos for dataset-level violations
  std::string what;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Structural validation; violations are data, not errors.
std::vector<Violation> validate(const Dataset& dataset);

// Throws std::invalid_argument listing the violations, if any.
void require_valid(const Dataset& dataset);

}  // namespace qrtd

#endif  // QRTD_TYPES_HPP_
