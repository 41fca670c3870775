#include "hgop/hilbertop.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <fmt/format.h>

#include "hgop/error.hpp"
#include "hgop/fit.hpp"
#include "hgop/quadrature.hpp"

namespace hgop {

namespace {

// Neumaier-compensated accumulation of one real component.
struct CompensatedSum {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      c += (sum - t) + x;
    else
      c += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + c; }
};

struct ComplexSum {
  CompensatedSum re, im;
  void add(Complex z) {
    re.add(z.real());
    im.add(z.imag());
  }
  Complex value() const { return {re.value(), im.value()}; }
};

double rounded_entry(double b, std::size_t n, std::size_t k) {
  const long double num = static_cast<long double>(n + 1) * static_cast<long double>(b);
  return static_cast<double>(num / static_cast<long double>(n + k + 1));
}

}  // namespace

Complex moment(const CoefficientSequence& f, std::size_t n) {
  ComplexSum s;
  const auto a = f.coeffs();
  for (std::size_t k = 0; k < a.size(); ++k) s.add(a[k] / static_cast<double>(n + k + 1));
  return s.value();
}

Complex moment_quadrature(const CoefficientSequence& f, std::size_t n) {
  auto part = [&](bool imag) {
    auto fn = [&](double t) {
      const Complex v = f.evaluate(Complex(t, 0.0));
      return std::pow(t, static_cast<double>(n)) * (imag ? v.imag() : v.real());
    };
    return integrate(fn, 0.0, 1.0, 1e-13, 1e-15).value;
  };
  return {part(false), f.is_real() ? 0.0 : part(true)};
}

Complex operator_entry(const CoefficientSequence& g, std::size_t n, std::size_t k) {
  const Complex b = g.coefficient(n + 1);
  return {rounded_entry(b.real(), n, k), b.imag() == 0.0 ? 0.0 : rounded_entry(b.imag(), n, k)};
}

Complex operator_diagonal(const CoefficientSequence& g, std::size_t n) {
  const Complex b = g.coefficient(n + 1);
  const long double m = static_cast<long double>(n + 1);
  return {static_cast<double>(m * b.real()), static_cast<double>(m * b.imag())};
}

void check_well_defined(const CoefficientSequence& f) {
  const auto a = f.coeffs();
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::abs(a[k]) / static_cast<double>(k + 1);
  if (!(s < 1e8))
    throw NotWellDefined(fmt::format("moment series Σ|a_k|/(k+1) = {:.3g} is numerically divergent", s));
  const std::size_t K = f.truncation();
  if (K < 64) return;
  std::vector<double> x, y;
  for (std::size_t k = std::max<std::size_t>(1, K / 10); k <= K; ++k) {
    const double m = std::abs(a[k]);
    if (m == 0.0) continue;
    x.push_back(std::log(static_cast<double>(k)));
    y.push_back(std::log(m));
  }
  if (x.size() < 2) return;
  const double slope = fit_line(x, y).slope;
  if (!(slope < 0.0))
    throw NotWellDefined(fmt::format(
        "coefficients of f do not decay (last-decade log-slope {:.3g}); H_g(f) is not well defined", slope));
}

CoefficientSequence apply(const CoefficientSequence& g, const CoefficientSequence& f, std::size_t n_out) {
  check_well_defined(f);
  const auto a = f.coeffs();
  std::vector<Complex> c(n_out + 1);
  for (std::size_t n = 0; n <= n_out; ++n) {
    if (g.coefficient(n + 1) == Complex{}) continue;
    ComplexSum s;
    for (std::size_t k = 0; k < a.size(); ++k) s.add(operator_entry(g, n, k) * a[k]);
    c[n] = s.value();
  }
  return CoefficientSequence(std::move(c));
}

std::size_t max_dense_entries() {
  if (const char* env = std::getenv("HL_MAX_MATRIX")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 27;
}

OperatorMatrix matrix(const CoefficientSequence& g, std::size_t N, std::size_t K) {
  const std::size_t rows = N + 1, cols = K + 1;
  if (rows > max_dense_entries() / cols)
    throw CapacityError(fmt::format("dense {}x{} matrix exceeds the cap of {} entries", rows, cols, max_dense_entries()));
  OperatorMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.re_.assign(rows * cols, 0.0);
  if (!g.is_real()) m.im_.assign(rows * cols, 0.0);
  m.diag_.resize(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    m.diag_[n] = operator_diagonal(g, n);
    for (std::size_t k = 0; k < cols; ++k) {
      const Complex e = operator_entry(g, n, k);
      m.re_[n * cols + k] = e.real();
      if (!m.im_.empty()) m.im_[n * cols + k] = e.imag();
    }
  }
  return m;
}

Complex OperatorMatrix::entry(std::size_t n, std::size_t k) const {
  const std::size_t i = n * cols_ + k;
  return {re_[i], im_.empty() ? 0.0 : im_[i]};
}

CoefficientSequence OperatorMatrix::multiply(const CoefficientSequence& f) const {
  std::vector<Complex> c(rows_);
  const std::size_t K = std::min(cols_, f.size());
  for (std::size_t n = 0; n < rows_; ++n) {
    if (diag_[n] == Complex{}) continue;
    ComplexSum s;
    for (std::size_t k = 0; k < K; ++k) s.add(entry(n, k) * f[k]);
    c[n] = s.value();
  }
  return CoefficientSequence(std::move(c));
}

std::vector<double> hilbert_section(std::size_t N, std::size_t K) {
  std::vector<double> h((N + 1) * (K + 1));
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t k = 0; k <= K; ++k) h[n * (K + 1) + k] = 1.0 / static_cast<double>(n + k + 1);
  return h;
}

CoefficientSequence classical_hilbert(const CoefficientSequence& f, std::size_t n_out) {
  std::vector<Complex> c(n_out + 1);
  for (std::size_t n = 0; n <= n_out; ++n) c[n] = moment(f, n);
  return CoefficientSequence(std::move(c));
}

CoefficientSequence derivative_shift(const CoefficientSequence& g, std::size_t n_out) {
  std::vector<Complex> c(n_out + 1);
  for (std::size_t n = 0; n <= n_out; ++n) c[n] = operator_diagonal(g, n);
  return CoefficientSequence(std::move(c));
}

CoefficientSequence hadamard(const CoefficientSequence& f, const CoefficientSequence& g) {
  const std::size_t n = std::min(f.size(), g.size());
  std::vector<Complex> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = f[k] * g[k];
  return CoefficientSequence(std::move(c));
}

CoefficientSequence fractional_derivative(const CoefficientSequence& f, double t) {
  if (!std::isfinite(t)) throw DomainError("fractional derivative order must be finite");
  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
  if (t == 0.0) return CoefficientSequence(std::move(c));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] *= std::pow(static_cast<double>(n + 1), t);
  return CoefficientSequence(std::move(c));
}

}  // namespace hgop
