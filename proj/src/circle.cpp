#include "hgop/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/tools/minima.hpp>
#include <fftw3.h>

#include "hgop/error.hpp"

namespace hgop {

namespace {

void check_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0, 1)");
}

std::size_t next_pow2(std::size_t n) {
  std::size_t k = 1;
  while (k < n) k <<= 1;
  return k;
}

}  // namespace

std::size_t effective_degree(const CoefficientSequence& f, double r) {
  check_radius(r);
  const auto c = f.coeffs();
  if (r == 0.0) return 0;
  const double lr = std::log(r);
  double peak = 0.0;
  std::vector<double> w(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    const double m = std::abs(c[n]);
    w[n] = m == 0.0 ? 0.0 : std::exp(std::log(m) + static_cast<double>(n) * lr);
    peak = std::max(peak, w[n]);
  }
  if (peak == 0.0) return 0;
  std::size_t last = 0;
  for (std::size_t n = 0; n < c.size(); ++n)
    if (w[n] > 1e-17 * peak) last = n;
  return last;
}

std::vector<Complex> circle_samples(const CoefficientSequence& f, double r, std::size_t K) {
  check_radius(r);
  if (K == 0) throw DomainError("sample count must be positive");
  const auto c = f.coeffs();
  std::vector<Complex> buf(K, Complex{});
  const double lr = r > 0.0 ? std::log(r) : 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == Complex{}) continue;
    const double scale = n == 0 ? 1.0 : (r == 0.0 ? 0.0 : std::exp(static_cast<double>(n) * lr));
    if (scale == 0.0) continue;
    buf[n % K] += c[n] * scale;
  }
  if (K == 1) return buf;
  auto* data = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(K), data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return buf;
}

CircleMax circle_max(const CoefficientSequence& f, double r) {
  check_radius(r);
  if (f.is_nonnegative_real()) return {std::abs(f.evaluate(Complex(r, 0.0))), 0.0};
  const std::size_t K = std::max<std::size_t>(64, 4 * next_pow2(effective_degree(f, r) + 1));
  const auto s = circle_samples(f, r, K);
  std::size_t best = 0;
  for (std::size_t j = 1; j < K; ++j)
    if (std::abs(s[j]) > std::abs(s[best])) best = j;
  const double h = 2.0 * std::numbers::pi / static_cast<double>(K);
  const double center = h * static_cast<double>(best);
  auto neg = [&](double th) { return -std::abs(f.evaluate(std::polar(r, th))); };
  const auto [th, v] = boost::math::tools::brent_find_minima(neg, center - h, center + h, 52);
  if (-v > std::abs(s[best])) return {-v, th};
  return {std::abs(s[best]), center};
}

}  // namespace hgop
