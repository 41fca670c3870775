#pragma once

#include <cstddef>
#include <vector>

#include "hgop/coefficient_sequence.hpp"

namespace hgop {

/// Σ_{k≤K} a_k/(n+k+1): the n-th moment ∫_0^1 t^n f(t) dt of the truncated f.
Complex moment(const CoefficientSequence& f, std::size_t n);

/// ∫_0^1 t^n f(t) dt by adaptive Gauss–Kronrod on the real and imaginary parts
/// (independent of the series formula; meant for polynomial cross-checks).
Complex moment_quadrature(const CoefficientSequence& f, std::size_t n);

/// Entry (n,k) of the coefficient matrix: (n+1)·b_{n+1}/(n+k+1), formed in extended
/// precision and rounded once.
Complex operator_entry(const CoefficientSequence& g, std::size_t n, std::size_t k);

/// d_n = (n+1)·b_{n+1}.
Complex operator_diagonal(const CoefficientSequence& g, std::size_t n);

/// Rejects inputs whose moment series is numerically divergent: Σ|a_k|/(k+1) ≥ 1e8, or
/// (for truncations ≥ 64) a nonnegative log-log slope of |a_k| over the last decade.
void check_well_defined(const CoefficientSequence& f);

/// Coefficients c_0..c_{N_out} of H_g(f): c_n = (n+1)b_{n+1} Σ_k a_k/(n+k+1).
/// Summation is ascending in k with Neumaier compensation, identical to
/// OperatorMatrix::multiply, so the two agree bitwise.
CoefficientSequence apply(const CoefficientSequence& g, const CoefficientSequence& f, std::size_t n_out);

/// Dense (N+1)×(K+1) truncation of the coefficient matrix of H_g.
class OperatorMatrix {
 public:
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_real() const noexcept { return im_.empty(); }

  Complex entry(std::size_t n, std::size_t k) const;
  /// d_n = (n+1) b_{n+1}, n = 0..N.
  const std::vector<Complex>& diagonal() const noexcept { return diag_; }

  /// Row-by-row product with the first K+1 coefficients of f (ascending-k compensated sums).
  CoefficientSequence multiply(const CoefficientSequence& f) const;

  const std::vector<double>& real_entries() const noexcept { return re_; }  // row-major
  const std::vector<double>& imag_entries() const noexcept { return im_; }

 private:
  friend OperatorMatrix matrix(const CoefficientSequence& g, std::size_t N, std::size_t K);
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> re_;
  std::vector<double> im_;
  std::vector<Complex> diag_;
};

/// Dense cap on entries; HL_MAX_MATRIX overrides the default of 2^27 entries.
std::size_t max_dense_entries();

OperatorMatrix matrix(const CoefficientSequence& g, std::size_t N, std::size_t K);

/// 1/(n+k+1) for n ≤ N, k ≤ K.
std::vector<double> hilbert_section(std::size_t N, std::size_t K);

/// Classical Hilbert operator: n-th coefficient Σ_k a_k/(n+k+1).
CoefficientSequence classical_hilbert(const CoefficientSequence& f, std::size_t n_out);

/// Coefficients (n+1)b_{n+1} of g'.
CoefficientSequence derivative_shift(const CoefficientSequence& g, std::size_t n_out);

/// Coefficientwise product (truncated to the shorter input).
CoefficientSequence hadamard(const CoefficientSequence& f, const CoefficientSequence& g);

/// D^t f = Σ (n+1)^t a_n z^n.
CoefficientSequence fractional_derivative(const CoefficientSequence& f, double t);

}  // namespace hgop
