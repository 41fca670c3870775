#include "oracles.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hgop::oracle {

std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd S, double tol, int max_sweeps) {
  const Eigen::Index n = S.rows();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += S(p, q) * S(p, q);
    if (off <= tol * tol * std::max(1.0, S.squaredNorm())) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = S(p, q);
        if (apq == 0.0) continue;
        const double theta = (S(q, q) - S(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double skp = S(k, p), skq = S(k, q);
          S(k, p) = c * skp - s * skq;
          S(k, q) = s * skp + c * skq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double spk = S(p, k), sqk = S(q, k);
          S(p, k) = c * spk - s * sqk;
          S(q, k) = s * spk + c * sqk;
        }
      }
    }
  }
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = S(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

double spectral_norm(const Eigen::MatrixXd& A) {
  if (A.size() == 0) return 0.0;
  const Eigen::MatrixXd S = A.transpose() * A;
  return std::sqrt(std::max(0.0, jacobi_eigenvalues(S).back()));
}

double spectral_norm(const Eigen::MatrixXcd& A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  Eigen::MatrixXd R(2 * m, 2 * n);
  R << A.real(), -A.imag(), A.imag(), A.real();
  return spectral_norm(R);
}

double harmonic(std::size_t n) {
  double s = 0.0, c = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double y = 1.0 / static_cast<double>(k) - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

double log_tail_integral(double a, double k) {
  // x = e^{1/s}: dx / (x log^k(x+1)) = ds / (s^2 L^k), L = 1/s + log1p(e^{-1/s}).
  auto f = [&](double s) {
    if (s == 0.0) return k == 2.0 ? 1.0 : 0.0;
    const double L = 1.0 / s + std::log1p(std::exp(-1.0 / s));
    return 1.0 / (s * s * std::pow(L, k));
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 1.0 / std::log(a), 15, 1e-12);
}

}  // namespace hgop::oracle
