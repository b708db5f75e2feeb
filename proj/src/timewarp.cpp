#include "qrtd/timewarp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qrtd {

namespace {

double guarded_rate(std::span<const double> beta, const std::vector<double>& x) {
  if (beta.size() != x.size())
    throw std::invalid_argument("warp: coefficient/path dimension mismatch");
  double bx = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) bx += beta[j] * x[j];
  if (bx > kExpGuard) throw std::range_error("warp: exp overflow, beta'x > 700");
  return std::exp(bx);
}

}  // namespace

double warp_integral(const CovariatePath& path, std::span<const double> beta, double upper) {
  if (upper < 0.0) throw std::domain_error("warp_integral: negative upper limit");
  if (path.values.empty()) throw std::invalid_argument("warp_integral: empty path");
  if (upper == 0.0) return 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < path.values.size(); ++k) {
    const double lo = path.breakpoints[k];
    if (lo >= upper) break;
    const double hi = (k + 1 < path.breakpoints.size())
                          ? std::min(path.breakpoints[k + 1], upper)
                          : upper;
    total += guarded_rate(beta, path.values[k]) * (hi - lo);
  }
  if (!std::isfinite(total)) throw std::range_error("warp_integral: non-finite result");
  return total;
}

double warp_inverse(const CovariatePath& path, std::span<const double> beta, double target) {
  if (!(target > 0.0)) throw std::domain_error("warp_inverse: target must be positive");
  if (path.values.empty()) throw std::invalid_argument("warp_inverse: empty path");
  double remaining = target;
  for (std::size_t k = 0; k < path.values.size(); ++k) {
    const double rate = guarded_rate(beta, path.values[k]);
    const double lo = path.breakpoints[k];
    if (k + 1 < path.breakpoints.size()) {
      const double area = rate * (path.breakpoints[k + 1] - lo);
      if (remaining <= area) return lo + remaining / rate;
      remaining -= area;
    } else {
      return lo + remaining / rate;   // last segment extends to infinity
    }
  }
  return std::numeric_limits<double>::quiet_NaN();  // unreachable
}

WarpProfile WarpProfile::build(const CovariatePath& path, double y) {
  WarpProfile p;
  for (std::size_t k = 0; k < path.values.size(); ++k) {
    const double lo = path.breakpoints[k];
    if (lo >= y) break;
    const double hi = (k + 1 < path.breakpoints.size())
                          ? std::min(path.breakpoints[k + 1], y)
                          : y;
    if (hi > lo) {
      p.x.push_back(path.values[k]);
      p.len.push_back(hi - lo);
    }
  }
  return p;
}

double WarpProfile::eval(std::span<const double> beta) const {
  double total = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k)
    total += guarded_rate(beta, x[k]) * len[k];
  return total;
}

}  // namespace qrtd
