#ifndef QRTD_STATS_HPP_
#define QRTD_STATS_HPP_

#include <span>
#include <vector>

namespace qrtd {

// Linear-interpolation sample quantile (R type 7). p in [0, 1].
double quantile_type7(std::vector<double> sorted_or_not, double p);

double sample_mean(std::span<const double> x);
double sample_sd(std::span<const double> x);       // ddof = 1; NaN for n < 2
double sample_median(std::vector<double> x);

// Interquartile range divided by 1.349, the normal-calibrated robust SD.
double iq_sd(std::vector<double> x);

inline constexpr double kNormalIqrRatio = 1.349;

// Standard normal quantile, used for confidence multipliers.
double normal_quantile(double p);

}  // namespace qrtd

#endif  // QRTD_STATS_HPP_
