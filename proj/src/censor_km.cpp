#include "qrtd/censor_km.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qrtd {

CensorCurve fit_censor_km(const Dataset& dataset, std::span<const double> weights) {
  const std::size_t n = dataset.size();
  if (n == 0) throw std::invalid_argument("fit_censor_km: empty dataset");
  if (!weights.empty()) {
    if (weights.size() != n)
      throw std::invalid_argument("fit_censor_km: weight count differs from dataset size");
    for (double w : weights)
      if (!(w > 0.0) || !std::isfinite(w))
        throw std::invalid_argument("fit_censor_km: weights must be positive and finite");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dataset.subjects[a].y < dataset.subjects[b].y;
  });

  double at_risk = 0.0;
  for (std::size_t i = 0; i < n; ++i) at_risk += weights.empty() ? 1.0 : weights[i];

  CensorCurve curve;
  double surv = 1.0;
  double haz = 0.0;
  std::size_t i = 0;
  while (i < n) {
    const double t = dataset.subjects[order[i]].y;
    double d_fail = 0.0, d_cens = 0.0;
    while (i < n && dataset.subjects[order[i]].y == t) {
      const double w = weights.empty() ? 1.0 : weights[order[i]];
      if (dataset.subjects[order[i]].event) d_fail += w;
      else d_cens += w;
      ++i;
    }
    // failures at t precede censorings at t in the censoring risk set
    const double risk = at_risk - d_fail;
    if (d_cens > 0.0 && risk > 0.0) {
      surv *= std::max(risk - d_cens, 0.0) / risk;
      haz += d_cens / risk;
      curve.jump_times.push_back(t);
      curve.survival.push_back(surv);
      curve.cumhaz.push_back(haz);
    }
    at_risk -= d_fail + d_cens;
  }
  return curve;
}

double survival_at(const CensorCurve& curve, double t, Side side) {
  if (t < 0.0) throw std::domain_error("survival_at: negative time");
  const auto& times = curve.jump_times;
  std::size_t idx;
  if (side == Side::right) {
    idx = static_cast<std::size_t>(
        std::upper_bound(times.begin(), times.end(), t) - times.begin());
  } else {
    idx = static_cast<std::size_t>(
        std::lower_bound(times.begin(), times.end(), t) - times.begin());
  }
  return idx == 0 ? 1.0 : curve.survival[idx - 1];
}

std::vector<std::pair<double, double>> cumhaz_increments(const CensorCurve& curve) {
  std::vector<std::pair<double, double>> out;
  out.reserve(curve.jump_times.size());
  double prev = 0.0;
  for (std::size_t j = 0; j < curve.jump_times.size(); ++j) {
    out.emplace_back(curve.jump_times[j], curve.cumhaz[j] - prev);
    prev = curve.cumhaz[j];
  }
  return out;
}

IpcwValues ipcw_survival(const Dataset& dataset, const CensorCurve& curve) {
  IpcwValues out;
  out.g.resize(dataset.size(), 1.0);
  double y_max = 0.0;
  for (const Subject& s : dataset.subjects) y_max = std::max(y_max, s.y);
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    double g = survival_at(curve, dataset.subjects[i].y, Side::right);
    if (g <= 0.0 && dataset.subjects[i].y >= y_max)
      g = survival_at(curve, dataset.subjects[i].y, Side::left);
    if (g < kIpcwClamp) {
      g = kIpcwClamp;
      if (dataset.subjects[i].event) ++out.clamp_count;
    }
    out.g[i] = g;
  }
  return out;
}

}  // namespace qrtd
