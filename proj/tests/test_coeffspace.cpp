#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>

#include "hgop/coefficient_sequence.hpp"
#include "hgop/error.hpp"
#include "hgop/membership.hpp"
#include "hgop/norms.hpp"
#include "hgop/series.hpp"
#include "hgop/space.hpp"
#include "hgop/symbol.hpp"

using namespace hgop;

TEST_SUITE("coeffspace") {

TEST_CASE("sequence invariants") {
  CHECK_THROWS_AS(CoefficientSequence(std::vector<Complex>{}), DomainError);
  CHECK_THROWS_AS(CoefficientSequence(std::vector<Complex>{1.0, NAN}), DomainError);
  const CoefficientSequence f(std::vector<Complex>{1.0, 2.0, 3.0});
  CHECK(f.truncation() == 2);
  CHECK(f.coefficient(7) == Complex{});
  // 1 + 2z + 3z^2 at z = 0.5i
  const Complex z(0.0, 0.5);
  CHECK(std::abs(f.evaluate(z) - (1.0 + 2.0 * z + 3.0 * z * z)) < 1e-15);
  CHECK(std::abs(f.evaluate_derivative(z) - (2.0 + 6.0 * z)) < 1e-15);
  CHECK(f.truncated(4).size() == 5);
  CHECK(f.truncated(4).truncated(2) == f);
  CHECK((f + f - f) == f);
}

TEST_CASE("expand: closed-form symbols") {
  const auto lg = expand("log", 3);
  CHECK(lg[0] == 0.0);
  CHECK(lg[1] == 1.0);
  CHECK(lg[2] == 0.5);
  CHECK(lg[3] == 1.0 / 3.0);

  // (1-z)^{-1/2}: binomial coefficients C(2n,n)/4^n
  const auto c = expand("cayley:0.5", 6);
  double binom = 1.0;
  for (int n = 0; n <= 6; ++n) {
    if (n > 0) binom *= (2.0 * n - 1.0) / (2.0 * n);
    CHECK(c[n].real() == doctest::Approx(binom).epsilon(1e-15));
  }
  CHECK(expand("power:0", 4)[0] == 0.0);
  CHECK(expand("power:-1", 4)[4] == 0.25);
  CHECK(expand("poly:1,2,3", 5)[2] == 3.0);
  CHECK(expand("poly:1,2,3", 5)[4] == 0.0);
  CHECK(expand("poly:1,2,3", 1).truncation() == 1);
  CHECK(expand("powlog:-1:-1", 8)[7].real() == doctest::Approx(1.0 / (7.0 * std::log(8.0))));
}

TEST_CASE("expand: logpow(0) behaves like 1/n") {
  // log(e/(1-z)) = 1 + sum z^n/n
  const auto f = expand("logpow:0", 1 << 12);
  CHECK(f[0].real() == doctest::Approx(1.0));
  for (std::size_t n : {1u, 10u, 100u, 4096u}) CHECK(f[n].real() * static_cast<double>(n) == doctest::Approx(1.0));
  // log^2(e/(1-z)): Cauchy square of the series above, by direct convolution
  const std::size_t N = 64;
  const auto sq = expand("logpow:1", N);
  for (std::size_t n = 0; n <= N; ++n) {
    double ref = 0.0;
    for (std::size_t k = 0; k <= n; ++k) ref += f[k].real() * f[n - k].real();
    CHECK(sq[n].real() == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("expand is deterministic and rejects bad specs") {
  CHECK(expand("logpow:0.5", 300) == expand("logpow:0.5", 300));
  CHECK_THROWS_AS(SymbolSpec::parse("nosuch:1"), ParseError);
  CHECK_THROWS(SymbolSpec::parse("power"));
  CHECK(SymbolSpec::parse("cayley:0.5").to_string() == "cayley:0.5");
}

TEST_CASE("coefficient file") {
  const std::string path = "coeff_test_file.txt";
  {
    std::ofstream out(path);
    out << "# comment\n1\n0.5,-2\n\n3\n";
  }
  const auto f = read_coefficient_file(path);
  CHECK(f.truncation() == 2);
  CHECK(f[1] == Complex(0.5, -2.0));
  CHECK(expand("file:" + path, 5).truncation() == 5);
}

TEST_CASE("series algebra") {
  // (1-z)^{-1} squared is (1-z)^{-2}: coefficients n+1
  const std::vector<double> geo(20, 1.0);
  const auto sq = series::multiply(geo, geo, 19);
  for (std::size_t n = 0; n < 20; ++n) CHECK(sq[n] == doctest::Approx(static_cast<double>(n + 1)));
  // log(1/(1-z)) from the series log of the geometric series
  const auto lg = series::log(geo, 19);
  for (std::size_t n = 1; n < 20; ++n) CHECK(lg[n] == doctest::Approx(1.0 / static_cast<double>(n)));
  // ((1-z)^{-1})^{1/2} is (1-z)^{-1/2}
  const auto half = series::power(geo, 0.5, 19);
  CHECK(half[3] == doctest::Approx(5.0 / 16.0));
}

TEST_CASE("space grammar") {
  CHECK(SpaceSpec::parse("D2:0.5") == SpaceSpec::dirichlet(0.5));
  CHECK(SpaceSpec::parse("W") == SpaceSpec::wiener());
  CHECK(SpaceSpec::parse("Hinf").is_hinf());
  CHECK(SpaceSpec::parse("Blog:0").canonical() == SpaceSpec::parse("B:1").canonical());
  CHECK(SpaceSpec::parse("B").is_bloch());
  CHECK(SpaceSpec::parse("Lip:2:0.5").to_string() == "Lip:2:0.5");
  CHECK_THROWS(SpaceSpec::parse("HL:0.5"));
  CHECK_THROWS(SpaceSpec::parse("Q:1"));
}

TEST_CASE("Dirichlet, Wiener and HL norms") {
  CHECK(norm_dirichlet(CoefficientSequence(std::vector<Complex>{0.0, 1.0}), 0.0) == 1.0);
  CHECK(norm_dirichlet(CoefficientSequence(std::vector<Complex>{1.0, 2.0}), 1.0) == doctest::Approx(std::sqrt(5.0)));
  // alpha = -1: |b0|^2 + sum n^2 |b_n|^2
  CHECK(norm_dirichlet(CoefficientSequence(std::vector<Complex>{1.0, 1.0, 1.0}), -1.0) ==
        doctest::Approx(std::sqrt(1.0 + 1.0 + 4.0)));
  // log at alpha = 2: squared norm is zeta(3) minus the omitted tail (< 1/(2N^2))
  const std::size_t N = 1 << 16;
  const double z3 = 1.2020569031595942;
  const double sq = std::pow(norm_dirichlet(expand("log", N), 2.0), 2);
  CHECK(sq < z3);
  CHECK(z3 - sq < 1.0 / (2.0 * N * N) + 1e-13);
  CHECK(norm_wiener(CoefficientSequence(std::vector<Complex>{1.0, 2.0})) == 3.0);
  const CoefficientSequence ones(std::vector<Complex>{1.0, 1.0, 1.0});
  CHECK(norm_hl(ones, 2.0) == doctest::Approx(std::sqrt(3.0)));
  CHECK(norm_hl(ones, 2.0) == doctest::Approx(norm_dirichlet(ones, 1.0)));
}

TEST_CASE("sup seminorms on radial grids") {
  // Bloch seminorm of log: sup (1-r^2)/(1-r) = 1+r -> 2 from below
  const auto est = seminorm_blochbeta(expand("log", 1 << 22), 1.0, RadialGrid::ladder(20));
  CHECK(est.value < 2.0);
  CHECK(est.value > 2.0 - 1e-5);
  // z has weighted sup of (1-r^2)^alpha r at the maximizing radius
  const CoefficientSequence z(std::vector<Complex>{0.0, 1.0});
  const RadialGrid grid({0.0, 0.25, 0.5, 0.75});
  const auto k = seminorm_korenblum(z, 1.0, grid);
  CHECK(k.value == doctest::Approx(std::max({0.25 * (1 - 0.0625), 0.5 * 0.75, 0.75 * (1 - 0.5625)})));
  CHECK_THROWS(RadialGrid({1.0}));
  CHECK(derivative_coeffs(CoefficientSequence(std::vector<Complex>{5.0, 1.0, 1.0})) ==
        CoefficientSequence(std::vector<Complex>{1.0, 2.0}));
}

TEST_CASE("membership traces") {
  MembershipBudget budget;
  budget.depth = 14;
  // log in Lambda^2_{1/2}: bounded trace
  const auto lg = membership_evidence(expand("log", 1 << 20), SpaceSpec::parse("Lip:2:0.5"), budget);
  CHECK(lg.status == TraceStatus::Bounded);
  CHECK(std::abs(lg.slope) < 0.05);
  // z: trace tends to 0
  const auto z = membership_evidence(expand("poly:0,1", 64), SpaceSpec::parse("Lip:2:0.5"), budget);
  REQUIRE(z.status == TraceStatus::Bounded);
  CHECK(z.values.back() < 0.02 * z.values.front());
  // a genuinely truncated series is refused
  CHECK(membership_evidence(expand("log", 64), SpaceSpec::parse("Lip:2:0.5"), budget).status ==
        TraceStatus::Inconclusive);
  // (1-z)^{-1/2}: grows with slope 1/2 (Parseval: M_2(r,f')^2 ~ (1-r)^{-2})
  const auto c = membership_evidence(expand("cayley:0.5", 1 << 20), SpaceSpec::parse("Lip:2:0.5"), budget);
  CHECK(c.status == TraceStatus::Grows);
  CHECK(c.slope == doctest::Approx(0.5).epsilon(0.1));
}

}  // TEST_SUITE
