#include "hgop/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "hgop/error.hpp"

namespace hgop {

QuadResult integrate(const std::function<double(double)>& fn, double a, double b, double rel_tol, double abs_tol) {
  if (a == b) return {};
  double err = 0.0;
  double l1 = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(fn, a, b, 25, rel_tol, &err, &l1);
  if (!std::isfinite(v)) throw ConvergenceError("quadrature produced a non-finite value");
  const double allowed = std::max(abs_tol, 100.0 * rel_tol * std::max(std::abs(v), l1));
  if (err > allowed)
    throw ConvergenceError(fmt::format("quadrature on [{}, {}] did not converge (error {:.3g})", a, b, err));
  return {v, err};
}

QuadResult integrate_panels(const std::function<double(double)>& fn, const std::vector<double>& breaks,
                            double rel_tol, double abs_tol) {
  QuadResult total;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const auto r = integrate(fn, breaks[i], breaks[i + 1], rel_tol, abs_tol);
    total.value += r.value;
    total.error += r.error;
  }
  return total;
}

QuadResult integrate_unit_interval(const std::function<double(double)>& weighted, std::vector<double> splits,
                                   double U, double rel_tol, double abs_tol) {
  std::vector<double> breaks{0.0};
  std::sort(splits.begin(), splits.end());
  for (double s : splits) {
    if (s > breaks.back() && s < U) {
      // Geometric panels between consecutive splits keep every panel's integrand tame.
      double x = std::max(breaks.back(), 0.5);
      while (2.0 * x < s) {
        if (x > breaks.back()) breaks.push_back(x);
        x *= 2.0;
      }
      breaks.push_back(s);
    }
  }
  double x = breaks.back() + 1.0;
  while (x < U) {
    breaks.push_back(x);
    x = breaks.back() + std::max(1.0, 0.5 * breaks.back());
  }
  breaks.push_back(U);
  return integrate_panels(weighted, breaks, rel_tol, abs_tol);
}

}  // namespace hgop
