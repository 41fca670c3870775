#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace hgop {

struct PowerOptions {
  double tolerance = 1e-8;  // relative change of the Rayleigh quotient of A^H A
  int max_iterations = 10000;
  int restarts = 3;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

template <class Scalar>
struct PowerResult {
  double norm = 0.0;  // sqrt of the converged Rayleigh quotient (best lower bound otherwise)
  int iterations = 0;
  int restarts_used = 0;
  bool converged = false;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> vector;  // right singular vector estimate
};

/// Spectral norm of A by power iteration on A^H A. `start` (if non-empty and of matching size)
/// is used as the first starting vector; restarts use deterministic pseudo-random vectors.
PowerResult<double> spectral_norm(const Eigen::Ref<const Eigen::MatrixXd>& A, const Eigen::VectorXd& start = {},
                                  const PowerOptions& opts = {});
PowerResult<std::complex<double>> spectral_norm(const Eigen::Ref<const Eigen::MatrixXcd>& A,
                                                const Eigen::VectorXcd& start = {}, const PowerOptions& opts = {});

}  // namespace hgop
