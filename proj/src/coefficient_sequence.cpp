#include "hgop/coefficient_sequence.hpp"

#include <algorithm>
#include <cmath>

#include "hgop/error.hpp"

namespace hgop {

CoefficientSequence::CoefficientSequence() : coeffs_(1, Complex{}) {}

CoefficientSequence::CoefficientSequence(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("coefficient sequence must hold at least a_0");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!std::isfinite(coeffs_[n].real()) || !std::isfinite(coeffs_[n].imag()))
      throw DomainError("non-finite coefficient at index " + std::to_string(n));
  }
}

CoefficientSequence CoefficientSequence::from_real(std::span<const double> coeffs) {
  return CoefficientSequence(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

Complex CoefficientSequence::evaluate(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex CoefficientSequence::evaluate_derivative(Complex z) const noexcept {
  Complex acc{};
  for (std::size_t n = coeffs_.size() - 1; n >= 1; --n)
    acc = acc * z + static_cast<double>(n) * coeffs_[n];
  return acc;
}

bool CoefficientSequence::is_nonnegative_real() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](Complex c) { return c.imag() == 0.0 && c.real() >= 0.0; });
}

bool CoefficientSequence::is_real() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c.imag() == 0.0; });
}

CoefficientSequence CoefficientSequence::truncated(std::size_t truncation) const {
  std::vector<Complex> c(truncation + 1);
  std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
  return CoefficientSequence(std::move(c));
}

CoefficientSequence CoefficientSequence::scaled(Complex c) const {
  std::vector<Complex> out(coeffs_);
  for (auto& x : out) x *= c;
  return CoefficientSequence(std::move(out));
}

CoefficientSequence operator+(const CoefficientSequence& a, const CoefficientSequence& b) {
  std::vector<Complex> out(std::max(a.size(), b.size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a.coefficient(n) + b.coefficient(n);
  return CoefficientSequence(std::move(out));
}

CoefficientSequence operator-(const CoefficientSequence& a, const CoefficientSequence& b) {
  std::vector<Complex> out(std::max(a.size(), b.size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a.coefficient(n) - b.coefficient(n);
  return CoefficientSequence(std::move(out));
}

}  // namespace hgop
