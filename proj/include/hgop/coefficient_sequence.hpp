#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hgop {

using Complex = std::complex<double>;

/// Truncated Taylor coefficients a_0..a_N of an analytic function on the disk.
///
/// a_n is the coefficient of z^n. The sequence is never empty (the zero
/// function is stored as [0]) and every entry is finite.
class CoefficientSequence {
 public:
  CoefficientSequence();
  explicit CoefficientSequence(std::vector<Complex> coeffs);

  static CoefficientSequence from_real(std::span<const double> coeffs);

  template <class Fn>
  static CoefficientSequence generate(std::size_t truncation, Fn&& coefficient) {
    std::vector<Complex> c(truncation + 1);
    for (std::size_t n = 0; n <= truncation; ++n) c[n] = Complex(coefficient(n));
    return CoefficientSequence(std::move(c));
  }

  std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  Complex operator[](std::size_t n) const { return coeffs_[n]; }
  /// Zero-extended access: a_n for n <= N, 0 beyond the truncation.
  Complex coefficient(std::size_t n) const noexcept {
    return n < coeffs_.size() ? coeffs_[n] : Complex{};
  }

  /// Horner evaluation of the partial sum at z.
  Complex evaluate(Complex z) const noexcept;
  /// Horner evaluation of the derivative of the partial sum at z.
  Complex evaluate_derivative(Complex z) const noexcept;

  /// True when every coefficient is real (imaginary part exactly 0) and >= 0.
  bool is_nonnegative_real() const noexcept;
  bool is_real() const noexcept;

  /// Cut or zero-pad to a new truncation.
  CoefficientSequence truncated(std::size_t truncation) const;
  CoefficientSequence scaled(Complex c) const;

  friend CoefficientSequence operator+(const CoefficientSequence& a, const CoefficientSequence& b);
  friend CoefficientSequence operator-(const CoefficientSequence& a, const CoefficientSequence& b);
  friend bool operator==(const CoefficientSequence& a, const CoefficientSequence& b) = default;

 private:
  std::vector<Complex> coeffs_;
};

}  // namespace hgop
