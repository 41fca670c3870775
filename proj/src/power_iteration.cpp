#include "hgop/power_iteration.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <type_traits>

namespace hgop {

namespace {

template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> seeded_vector(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    // Positive entries: a good start for entrywise nonnegative operators.
    const double x = 0.5 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if constexpr (std::is_same_v<Scalar, double>) {
      v(i) = x;
    } else {
      const double y = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
      v(i) = Scalar(x, 0.1 * y);
    }
  }
  return v;
}

template <class Scalar, class Mat>
PowerResult<Scalar> run(const Mat& A, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& start, const PowerOptions& opts) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  PowerResult<Scalar> best;
  const Eigen::Index n = A.cols();
  if (n == 0 || A.rows() == 0 || A.cwiseAbs().maxCoeff() == 0.0) {
    best.converged = true;
    return best;
  }
  for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
    Vec v = (attempt == 0 && start.size() == n && start.norm() > 0.0) ? start
                                                                      : seeded_vector<Scalar>(n, opts.seed + attempt);
    v.normalize();
    double lambda = 0.0;
    bool converged = false;
    int it = 0;
    Vec w(A.rows()), u(n);
    for (; it < opts.max_iterations; ++it) {
      w.noalias() = A * v;
      const double next = w.squaredNorm();
      u.noalias() = A.adjoint() * w;
      const double un = u.norm();
      if (un == 0.0) {  // v in the kernel of A^H A: restart
        lambda = next;
        break;
      }
      v = u / un;
      if (it > 0 && std::abs(next - lambda) <= opts.tolerance * next) {
        lambda = next;
        converged = true;
        ++it;
        break;
      }
      lambda = next;
    }
    const double norm = std::sqrt(lambda);
    best.iterations += it;
    if (norm > best.norm || attempt == 0) {
      best.norm = std::max(best.norm, norm);
      best.vector = v;
    }
    best.restarts_used = attempt;
    if (converged) {
      best.converged = true;
      best.norm = std::max(best.norm, norm);
      return best;
    }
  }
  return best;
}

}  // namespace

PowerResult<double> spectral_norm(const Eigen::Ref<const Eigen::MatrixXd>& A, const Eigen::VectorXd& start,
                                  const PowerOptions& opts) {
  return run<double>(A, start, opts);
}

PowerResult<std::complex<double>> spectral_norm(const Eigen::Ref<const Eigen::MatrixXcd>& A,
                                                const Eigen::VectorXcd& start, const PowerOptions& opts) {
  return run<std::complex<double>>(A, start, opts);
}

}  // namespace hgop
