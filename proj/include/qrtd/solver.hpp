#ifndef QRTD_SOLVER_HPP_
#define QRTD_SOLVER_HPP_

#include <functional>
#include <span>
#include <vector>

namespace qrtd {

using Objective = std::function<double(std::span<const double>)>;

struct MinimizeResult {
  std::vector<double> x;
  double fx = 0.0;
  int iterations = 0;
  int evaluations = 0;
};

struct NelderMeadOptions {
  int max_iterations = 2000;
  double x_tol = 1e-10;           // simplex diameter stop
  double f_tol = 0.0;             // spread of simplex values stop
  double f_target = -1.0;         // stop once best value <= target (if >= 0)
  std::vector<double> steps;      // per-coordinate initial simplex steps
};

MinimizeResult nelder_mead(const Objective& f, std::vector<double> x0,
                           const NelderMeadOptions& opts);

// Central-difference gradient with per-coordinate step h.
std::vector<double> numeric_gradient(const Objective& f, std::span<const double> x,
                                     double h);

struct PolishOptions {
  int max_iterations = 150;
  double grad_step = 1e-6;
  double grad_tol = 1e-12;
  double f_target = -1.0;
};

// BFGS with backtracking line search on a numeric gradient. Never returns a
// point worse than x0.
MinimizeResult bfgs_polish(const Objective& f, std::vector<double> x0,
                           const PolishOptions& opts);

}  // namespace qrtd

#endif  // QRTD_SOLVER_HPP_
