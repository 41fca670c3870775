#include <doctest.h>

#include <cmath>
#include <random>

#include "hgop/error.hpp"
#include "hgop/hilbertop.hpp"
#include "hgop/symbol.hpp"

using namespace hgop;

namespace {

CoefficientSequence random_sequence(std::mt19937_64& rng, std::size_t len) {
  std::normal_distribution<double> nd;
  std::vector<Complex> c(len);
  for (auto& x : c) x = Complex(nd(rng), nd(rng));
  return CoefficientSequence(std::move(c));
}

}  // namespace

TEST_SUITE("hilbertop") {

TEST_CASE("moments of simple functions") {
  const CoefficientSequence one(std::vector<Complex>{1.0});
  CHECK(moment(one, 0) == Complex(1.0));
  CHECK(moment(one, 4) == Complex(0.2));
  // (1-z)^{-1/2}: moment 0 is 2 minus the tail sum_{k>K} a_k/(k+1) ~ 2/sqrt(pi K)
  const std::size_t K = 1 << 16;
  const double m0 = moment(expand("cayley:0.5", K), 0).real();
  CHECK(m0 < 2.0);
  CHECK((2.0 - m0) * std::sqrt(std::acos(-1.0) * K) == doctest::Approx(2.0).epsilon(0.01));
  // series vs quadrature for a polynomial
  const auto p = expand("poly:1,-2,0.5,3", 3);
  for (std::size_t n : {0u, 3u, 17u}) CHECK(std::abs(moment(p, n) - moment_quadrature(p, n)) < 1e-10);
}

TEST_CASE("apply: simple symbols") {
  const CoefficientSequence one(std::vector<Complex>{1.0});
  const auto z = apply(expand("poly:0,1", 6), one, 5);
  CHECK(z[0] == Complex(1.0));
  for (std::size_t n = 1; n <= 5; ++n) CHECK(z[n] == Complex(0.0));
  const auto lg = apply(expand("log", 33), one, 32);
  for (std::size_t n = 0; n <= 32; ++n) CHECK(lg[n] == Complex(1.0 / static_cast<double>(n + 1)));
}

TEST_CASE("apply(g, 1) recovers (g - g(0))/z bitwise") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    const auto g = random_sequence(rng, 40);
    const auto c = apply(g, CoefficientSequence(std::vector<Complex>{1.0}), 38);
    for (std::size_t n = 0; n <= 38; ++n) CHECK(c[n] == g[n + 1]);
  }
}

TEST_CASE("apply is bilinear") {
  std::mt19937_64 rng(2);
  const auto g1 = random_sequence(rng, 30), g2 = random_sequence(rng, 30);
  const auto f1 = random_sequence(rng, 20), f2 = random_sequence(rng, 20);
  const auto lhs = apply(g1 + g2, f1.scaled(Complex(2.0, -1.0)) + f2, 25);
  const auto rhs = apply(g1, f1, 25).scaled(Complex(2.0, -1.0)) + apply(g2, f1, 25).scaled(Complex(2.0, -1.0)) +
                   apply(g1, f2, 25) + apply(g2, f2, 25);
  for (std::size_t n = 0; n <= 25; ++n) CHECK(std::abs(lhs[n] - rhs[n]) < 1e-12 * (1.0 + std::abs(rhs[n])));
}

TEST_CASE("matrix: Hilbert matrix and constant symbol") {
  const auto M = matrix(expand("log", 2), 1, 1);
  CHECK(M.entry(0, 0) == Complex(1.0));
  CHECK(M.entry(0, 1) == Complex(0.5));
  CHECK(M.entry(1, 0) == Complex(0.5));
  CHECK(M.entry(1, 1) == Complex(1.0 / 3.0));
  const auto P = matrix(expand("power:0", 9), 7, 7);
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t k = 0; k <= 7; ++k)
      CHECK(P.entry(n, k).real() == doctest::Approx(static_cast<double>(n + 1) / static_cast<double>(n + k + 1)));
  const auto H = hilbert_section(3, 3);
  CHECK(H[1 * 4 + 2] == 0.25);
}

TEST_CASE("matrix-vector equals apply bitwise") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const std::size_t N = 1 + rng() % 30, K = rng() % 30;
    const auto g = random_sequence(rng, N + 2);
    const auto f = random_sequence(rng, K + 1);
    CHECK(matrix(g, N, K).multiply(f) == apply(g, f, N));
  }
}

TEST_CASE("dense cap") {
  setenv("HL_MAX_MATRIX", "100", 1);
  CHECK(max_dense_entries() == 100);
  CHECK_THROWS_AS(matrix(expand("log", 20), 19, 19), CapacityError);
  unsetenv("HL_MAX_MATRIX");
  CHECK(max_dense_entries() == (std::size_t{1} << 27));
}

TEST_CASE("well-definedness guard") {
  CHECK_THROWS_AS(apply(expand("log", 10), expand("power:2", 200), 5), NotWellDefined);
  CHECK_NOTHROW(apply(expand("log", 10), expand("cayley:0.5", 200), 5));
}

TEST_CASE("derivative shift of log is one") {
  const auto d = derivative_shift(expand("log", 1001), 1000);
  for (std::size_t n = 0; n <= 1000; ++n) CHECK(std::abs(d[n].real() - 1.0) <= 2.3e-16);
}

TEST_CASE("classical Hilbert operator agrees with the log symbol") {
  std::mt19937_64 rng(4);
  const auto f = random_sequence(rng, 50);
  const auto a = classical_hilbert(f, 40);
  const auto b = apply(expand("log", 41), f, 40);
  for (std::size_t n = 0; n <= 40; ++n) CHECK(std::abs(a[n] - b[n]) <= 1e-14 * (1.0 + std::abs(a[n])));
}

TEST_CASE("Hadamard and fractional derivatives") {
  const auto lg = expand("log", 50);
  const auto h = hadamard(lg, lg);
  for (std::size_t n = 1; n <= 50; ++n) CHECK(h[n].real() == doctest::Approx(1.0 / static_cast<double>(n * n)));
  std::mt19937_64 rng(5);
  const auto f = random_sequence(rng, 30);
  CHECK(fractional_derivative(f, 0.0) == f);
  const auto st = fractional_derivative(fractional_derivative(f, 0.7), 1.6);
  const auto direct = fractional_derivative(f, 2.3);
  for (std::size_t n = 0; n < 30; ++n) CHECK(std::abs(st[n] - direct[n]) <= 1e-13 * std::abs(direct[n]));
}

}  // TEST_SUITE
