#include "qrtd/stats.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qrtd {

double quantile_type7(std::vector<double> x, double p) {
  if (x.empty()) throw std::invalid_argument("quantile: empty sample");
  if (p < 0.0 || p > 1.0) throw std::domain_error("quantile: p outside [0,1]");
  std::sort(x.begin(), x.end());
  const double h = (static_cast<double>(x.size()) - 1.0) * p;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= x.size()) return x.back();
  return x[lo] + (h - static_cast<double>(lo)) * (x[lo + 1] - x[lo]);
}

double sample_mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double sample_sd(std::span<const double> x) {
  if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double m = sample_mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

double sample_median(std::vector<double> x) { return quantile_type7(std::move(x), 0.5); }

double iq_sd(std::vector<double> x) {
  if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double q3 = quantile_type7(x, 0.75);
  const double q1 = quantile_type7(std::move(x), 0.25);
  return (q3 - q1) / kNormalIqrRatio;
}

double normal_quantile(double p) {
  static const boost::math::normal_distribution<double> dist(0.0, 1.0);
  return boost::math::quantile(dist, p);
}

}  // namespace qrtd
