#ifndef QRTD_CENSOR_KM_HPP_
#define QRTD_CENSOR_KM_HPP_

#include <span>
#include <utility>
#include <vector>

#include "qrtd/types.hpp"

namespace qrtd {

// Step-function estimate of the censoring survival function G and its
// Nelson-Aalen cumulative hazard. survival[j] and cumhaz[j] are the values
// at and after jump_times[j] (right-continuous); G(0) = 1, cumhaz(0) = 0.
struct CensorCurve {
  std::vector<double> jump_times;
  std::vector<double> survival;
  std::vector<double> cumhaz;
};

enum class Side { left, right };

// Weighted product-limit estimator treating censorings (event = false) as
// the events. Ties: failures leave the censoring risk set just before their
// own time. Empty weights mean all ones; weights must be positive.
CensorCurve fit_censor_km(const Dataset& dataset, std::span<const double> weights = {});

double survival_at(const CensorCurve& curve, double t, Side side = Side::right);

// Discrete Nelson-Aalen increments (time, dLambda) at the jump times.
std::vector<std::pair<double, double>> cumhaz_increments(const CensorCurve& curve);

// Per-subject IPCW denominators G(Y_i) with the largest-observation left
// limit fallback, clamped below at kIpcwClamp. clamp_count records how many
// subjects were clamped.
struct IpcwValues {
  std::vector<double> g;
  int clamp_count = 0;
};

inline constexpr double kIpcwClamp = 1e-10;

IpcwValues ipcw_survival(const Dataset& dataset, const CensorCurve& curve);

}  // namespace qrtd

#endif  // QRTD_CENSOR_KM_HPP_
