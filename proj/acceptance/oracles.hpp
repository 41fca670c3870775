#pragma once

// Independent reference computations used only to check the library.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace hgop::oracle {

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd S, double tol = 1e-15, int max_sweeps = 100);

/// Largest singular value via Jacobi on A^T A.
double spectral_norm(const Eigen::MatrixXd& A);
double spectral_norm(const Eigen::MatrixXcd& A);  // via the real 2n×2n embedding

/// H_n = Σ_{k=1}^n 1/k (Kahan summation).
double harmonic(std::size_t n);

/// ∫_a^∞ dx / (x log^k(x+1)) by Boost tanh-sinh / exp-sinh quadrature.
double log_tail_integral(double a, double k);

}  // namespace hgop::oracle
