#ifndef QRTD_TIMEWARP_HPP_
#define QRTD_TIMEWARP_HPP_

#include <span>
#include <vector>

#include "qrtd/types.hpp"

namespace qrtd {

struct Coefficients {
  std::vector<double> beta;   // leading coordinate is the intercept
  double q = 0.5;
};

// Largest linear-predictor value allowed inside exp(); beyond this the
// integrand overflows and the caller gets a range error instead of inf.
inline constexpr double kExpGuard = 700.0;

// Closed-form integral of exp(beta' X(t)) over [0, upper] for a step path.
double warp_integral(const CovariatePath& path, std::span<const double> beta, double upper);

// The unique theta with warp_integral(path, beta, theta) == target, found by
// segment-wise accumulation and a linear solve inside the final segment.
double warp_inverse(const CovariatePath& path, std::span<const double> beta, double target);

// Per-subject precomputation for the solver hot loop: segment covariate
// vectors paired with their overlap length against [0, y].
struct WarpProfile {
  std::vector<std::vector<double>> x;   // one vector per contributing segment
  std::vector<double> len;

  static WarpProfile build(const CovariatePath& path, double y);
  double eval(std::span<const double> beta) const;
};

}  // namespace qrtd

#endif  // QRTD_TIMEWARP_HPP_
