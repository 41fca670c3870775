#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hgop/circle.hpp"
#include "hgop/error.hpp"
#include "hgop/fit.hpp"
#include "hgop/means.hpp"
#include "hgop/quadrature.hpp"
#include "hgop/symbol.hpp"

using namespace hgop;

TEST_SUITE("means") {

TEST_CASE("circle sampling matches Horner") {
  const auto f = expand("cayley:0.5", 40);
  const double r = 0.8;
  const std::size_t K = 16;  // smaller than the degree: exercises folding
  const auto s = circle_samples(f, r, K);
  for (std::size_t j = 0; j < K; ++j) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(K);
    CHECK(std::abs(s[j] - f.evaluate(std::polar(r, th))) < 1e-13);
  }
  const auto z2 = expand("poly:1,0,-1", 2);  // |1 - z^2| is largest at theta = pi/2
  const auto m = circle_max(z2, 0.5);
  CHECK(m.value == doctest::Approx(1.25).epsilon(1e-12));
}

TEST_CASE("integral means: closed forms") {
  const CoefficientSequence f(std::vector<Complex>{1.0, 1.0});
  CHECK(integral_mean(f, 2.0, 0.5) == doctest::Approx(std::sqrt(5.0) / 2.0).epsilon(1e-14));
  const CoefficientSequence one(std::vector<Complex>{1.0});
  for (double p : {1.0, 3.0, kInfinity}) CHECK(integral_mean(one, p, 0.7) == doctest::Approx(1.0));
  CHECK_THROWS_AS(integral_mean(one, 0.5, 0.7), DomainError);
  // sup of a nonnegative-coefficient function is f(r)
  const auto lg = expand("log", 1 << 12);
  CHECK(integral_mean(lg, kInfinity, 0.9) == doctest::Approx(-std::log(0.1)).epsilon(1e-12));
}

TEST_CASE("M_2 equals Parseval") {
  const auto f = expand("cayley:0.7", 1 << 18);
  for (double r : {0.5, 0.9, 1.0 - std::ldexp(1.0, -10)}) {
    double s = 0.0;
    for (std::size_t n = 0; n < f.size(); ++n) s += std::norm(f[n]) * std::pow(r, 2.0 * static_cast<double>(n));
    CHECK(integral_mean(f, 2.0, r) == doctest::Approx(std::sqrt(s)).epsilon(1e-10));
  }
}

TEST_CASE("M_1 of log against sampling of the closed form") {
  const double r = 0.99;
  const std::size_t K = std::size_t{1} << 18;
  double acc = 0.0;
  for (std::size_t j = 0; j < K; ++j) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(K);
    acc += std::abs(-std::log(1.0 - std::polar(r, th)));
  }
  const double ref = acc / static_cast<double>(K);
  CHECK(integral_mean(expand("log", 1 << 13), 1.0, r) == doctest::Approx(ref).epsilon(0.02));
}

TEST_CASE("means are nondecreasing in r") {
  const auto f = expand("ltest:0.9", 1 << 10);
  for (double p : {1.0, 2.5}) {
    double prev = 0.0;
    for (double r : radius_ladder(8.0)) {
      const double m = integral_mean(f, p, r);
      CHECK(m >= prev);
      prev = m;
    }
  }
}

TEST_CASE("quadrature") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value == doctest::Approx(2.0));
  // int_0^1 log(1/(1-t)) dt = 1, through t = 1 - e^{-u}
  const auto q = integrate_unit_interval([](double u) { return u * std::exp(-u); }, {}, 60.0);
  CHECK(q.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fits") {
  const std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
  const auto l = fit_line(x, y);
  CHECK(l.slope == doctest::Approx(2.0));
  CHECK(l.intercept == doctest::Approx(1.0));
  std::vector<double> a, b, z;
  for (int j = 3; j <= 20; ++j) {
    const double L = j * std::log(2.0);
    a.push_back(L);
    b.push_back(std::log(L));
    z.push_back(0.3 + 1.5 * L - 0.5 * std::log(L));
  }
  const auto p = fit_plane(a, b, z);
  CHECK(p.s == doctest::Approx(1.5));
  CHECK(p.t == doctest::Approx(-0.5));
}

TEST_CASE("weighted integral estimate") {
  const auto r0 = lemma42_ratio({0, 1, 0, 0}, {0.0});
  CHECK(r0.front().ratio == doctest::Approx(1.0));
  for (const Lemma42Params& p : {Lemma42Params{0, 1, 1, 0}, Lemma42Params{1, 0.5, 0, 1}})
    CHECK(certify_band(lemma42_ratio(p, radius_ladder(20.0))).pass);
}

TEST_CASE("moment asymptotics") {
  CHECK(moment_integral(0.0, 0.0) == doctest::Approx(2.0).epsilon(1e-13));
  double H = 0.0;
  for (int n = 0; n <= 200; ++n) {
    H += 1.0 / (n + 1.0);
    if (n % 37 == 0) CHECK(moment_integral(0.0, n) == doctest::Approx((1.0 + H) / (n + 1.0)).epsilon(1e-12));
  }
  const auto tr = moment_asymptotic_ratio(0.0, {0.0, 1024.0, 1e5});
  CHECK(tr[0].ratio == doctest::Approx(2.0));
  for (std::size_t i = 1; i < tr.size(); ++i) {
    CHECK(tr[i].ratio >= 0.8);
    CHECK(tr[i].ratio <= 1.3);
  }
}

TEST_CASE("mixed-norm derivative shift") {
  const auto radii = radius_ladder(12.0);
  const auto poly = mixed_norm_shift_check(expand("poly:1,2,3", 2), 2.0, kInfinity, 0.5, 1.0, radii);
  CHECK(std::isfinite(poly.base_sup));
  CHECK(std::isfinite(poly.ratio_max));
  const auto c = mixed_norm_shift_check(expand("cayley:0.5", 1 << 16), 2.0, kInfinity, 0.5, 1.0, radii);
  CHECK(c.ratio_min >= 0.1);
  CHECK(c.ratio_max <= 10.0);
  CHECK_THROWS(mixed_norm_shift_check(expand("log", 64), 2.0, 2.0, 0.5, 1.0, radii));
}

TEST_CASE("log-log blow-up trace") {
  // r = 0: int_0^inf log(2+u) e^{-u} du by a plain trapezoid oracle
  double ref = 0.0;
  const double h = 1e-4;
  for (int i = 0; i <= 800000; ++i) {
    const double u = i * h;
    ref += (i == 0 ? 0.5 : 1.0) * std::log(2.0 + u) * std::exp(-u) * h;
  }
  CHECK(remark47_value(0.0) == doctest::Approx(ref).epsilon(1e-7));
  CHECK(remark47_value(0.0) > std::log(2.0));
  std::vector<double> radii;
  for (int i = 0; i <= 20; ++i) radii.push_back(1.0 - std::exp2(-(10.0 + 0.5 * i)));
  const auto tr = remark47_blowup(radii);
  for (std::size_t i = 1; i < tr.size(); ++i) CHECK(tr[i].value >= tr[i - 1].value);
  CHECK(remark47_slope(tr, radii.front(), radii.back()) == doctest::Approx(1.0).epsilon(0.2));
}

}  // TEST_SUITE
