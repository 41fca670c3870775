#pragma once

#include <functional>
#include <vector>

namespace hgop {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // summed Gauss–Kronrod error estimates
};

/// Adaptive 31-point Gauss–Kronrod on [a, b]. Throws ConvergenceError when the
/// estimated error exceeds max(abs_tol, rel_tol·|value|).
QuadResult integrate(const std::function<double(double)>& fn, double a, double b,
                     double rel_tol = 1e-12, double abs_tol = 0.0);

/// Integrates fn over consecutive panels [breaks[i], breaks[i+1]].
QuadResult integrate_panels(const std::function<double(double)>& fn, const std::vector<double>& breaks,
                            double rel_tol = 1e-12, double abs_tol = 0.0);

/// ∫_0^1 h(t) dt through t = 1 - e^{-u}. `weighted(u)` must return h(1-e^{-u})·e^{-u};
/// callers evaluate it in log space near the endpoint. The u-range is cut at U and split
/// at the (sorted, positive) points in `splits`, which should mark where the integrand
/// changes scale (e.g. u = log 1/(1-r)). `abs_tol` applies per panel.
QuadResult integrate_unit_interval(const std::function<double(double)>& weighted, std::vector<double> splits,
                                   double U, double rel_tol = 1e-11, double abs_tol = 0.0);

}  // namespace hgop
