#include "qrtd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qrtd {

namespace {

double diameter(const std::vector<std::vector<double>>& simplex) {
  double d = 0.0;
  for (std::size_t i = 1; i < simplex.size(); ++i)
    for (std::size_t j = 0; j < simplex[i].size(); ++j)
      d = std::max(d, std::fabs(simplex[i][j] - simplex[0][j]));
  return d;
}

}  // namespace

MinimizeResult nelder_mead(const Objective& f, std::vector<double> x0,
                           const NelderMeadOptions& opts) {
  const std::size_t dim = x0.size();
  if (dim == 0) throw std::invalid_argument("nelder_mead: empty start");

  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

  std::vector<std::vector<double>> simplex;
  simplex.push_back(x0);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<double> v = x0;
    const double step = j < opts.steps.size() ? opts.steps[j] : 0.25;
    v[j] += step != 0.0 ? step : 0.25;
    simplex.push_back(std::move(v));
  }

  MinimizeResult result;
  std::vector<double> fv(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) {
    fv[i] = f(simplex[i]);
    ++result.evaluations;
  }

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front(), worst = order.back();
    const std::size_t second_worst = order[dim - 1];
    ++result.iterations;

    if (opts.f_target >= 0.0 && fv[best] <= opts.f_target) break;
    if (diameter(simplex) < opts.x_tol) break;
    if (opts.f_tol > 0.0 && fv[worst] - fv[best] < opts.f_tol) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    for (std::size_t j = 0; j < dim; ++j)
      xr[j] = centroid[j] + kReflect * (centroid[j] - simplex[worst][j]);
    const double fr = f(xr);
    ++result.evaluations;

    if (fr < fv[best]) {
      for (std::size_t j = 0; j < dim; ++j)
        xe[j] = centroid[j] + kExpand * (xr[j] - centroid[j]);
      const double fe = f(xe);
      ++result.evaluations;
      if (fe < fr) { simplex[worst] = xe; fv[worst] = fe; }
      else { simplex[worst] = xr; fv[worst] = fr; }
      continue;
    }
    if (fr < fv[second_worst]) {
      simplex[worst] = xr;
      fv[worst] = fr;
      continue;
    }
    const bool outside = fr < fv[worst];
    const std::vector<double>& base = outside ? xr : simplex[worst];
    for (std::size_t j = 0; j < dim; ++j)
      xc[j] = centroid[j] + kContract * (base[j] - centroid[j]);
    const double fc = f(xc);
    ++result.evaluations;
    if (fc < std::min(fr, fv[worst])) {
      simplex[worst] = xc;
      fv[worst] = fc;
      continue;
    }
    // shrink toward the best vertex
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < dim; ++j)
        simplex[i][j] = simplex[best][j] + kShrink * (simplex[i][j] - simplex[best][j]);
      fv[i] = f(simplex[i]);
      ++result.evaluations;
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= dim; ++i)
    if (fv[i] < fv[best]) best = i;
  result.x = simplex[best];
  result.fx = fv[best];
  return result;
}

std::vector<double> numeric_gradient(const Objective& f, std::span<const double> x,
                                     double h) {
  std::vector<double> grad(x.size());
  std::vector<double> p(x.begin(), x.end());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double step = h * std::max(1.0, std::fabs(x[j]));
    const double old = p[j];
    p[j] = old + step;
    const double fp = f(p);
    p[j] = old - step;
    const double fm = f(p);
    p[j] = old;
    grad[j] = (fp - fm) / (2.0 * step);
  }
  return grad;
}

MinimizeResult bfgs_polish(const Objective& f, std::vector<double> x0,
                           const PolishOptions& opts) {
  const std::size_t dim = x0.size();
  MinimizeResult result;
  result.x = x0;
  result.fx = f(x0);
  ++result.evaluations;

  std::vector<double> x = x0;
  double fx = result.fx;
  std::vector<double> grad = numeric_gradient(f, x, opts.grad_step);
  result.evaluations += static_cast<int>(2 * dim);

  // inverse Hessian approximation, started at identity
  std::vector<double> H(dim * dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) H[j * dim + j] = 1.0;

  std::vector<double> dir(dim), xn(dim), gn(dim), s(dim), yv(dim), Hy(dim);
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    ++result.iterations;
    double gnorm2 = 0.0;
    for (double g : grad) gnorm2 += g * g;
    if (gnorm2 < opts.grad_tol * opts.grad_tol) break;

    for (std::size_t i = 0; i < dim; ++i) {
      double d = 0.0;
      for (std::size_t j = 0; j < dim; ++j) d += H[i * dim + j] * grad[j];
      dir[i] = -d;
    }
    double slope = 0.0;
    for (std::size_t j = 0; j < dim; ++j) slope += dir[j] * grad[j];
    if (slope >= 0.0) {   // reset to steepest descent
      for (std::size_t j = 0; j < dim; ++j) dir[j] = -grad[j];
      slope = -gnorm2;
      std::fill(H.begin(), H.end(), 0.0);
      for (std::size_t j = 0; j < dim; ++j) H[j * dim + j] = 1.0;
    }

    double step = 1.0;
    double fn = fx;
    bool moved = false;
    for (int ls = 0; ls < 40; ++ls) {
      for (std::size_t j = 0; j < dim; ++j) xn[j] = x[j] + step * dir[j];
      fn = f(xn);
      ++result.evaluations;
      if (fn <= fx + 1e-4 * step * slope) { moved = true; break; }
      step *= 0.5;
    }
    if (!moved) break;

    gn = numeric_gradient(f, xn, opts.grad_step);
    result.evaluations += static_cast<int>(2 * dim);
    double sy = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      s[j] = xn[j] - x[j];
      yv[j] = gn[j] - grad[j];
      sy += s[j] * yv[j];
    }
    if (sy > 1e-14) {   // BFGS update of the inverse Hessian
      for (std::size_t i = 0; i < dim; ++i) {
        double hy = 0.0;
        for (std::size_t j = 0; j < dim; ++j) hy += H[i * dim + j] * yv[j];
        Hy[i] = hy;
      }
      double yHy = 0.0;
      for (std::size_t j = 0; j < dim; ++j) yHy += yv[j] * Hy[j];
      const double c1 = (sy + yHy) / (sy * sy);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          H[i * dim + j] += c1 * s[i] * s[j] -
                            (Hy[i] * s[j] + s[i] * Hy[j]) / sy;
    }
    x = xn;
    fx = fn;
    grad = gn;
    if (fx < result.fx) { result.x = x; result.fx = fx; }
    if (opts.f_target >= 0.0 && result.fx <= opts.f_target) break;
  }
  return result;
}

}  // namespace qrtd
