#include <doctest.h>

#include <cmath>

#include "hgop/diagnostics.hpp"
#include "hgop/error.hpp"
#include "hgop/symbol.hpp"

using namespace hgop;

namespace {

const std::size_t kBig = std::size_t{1} << 20;

}  // namespace

TEST_SUITE("diagnostics") {

TEST_CASE("block sums partition the range") {
  const auto g = expand("log", 1 << 12);
  const auto bs = block_sums(g, 10);
  // blocks cover n = 1..2^11 - 1 of |b_{n+1}|^2
  double direct = 0.0;
  for (std::size_t n = 1; n < (1u << 11); ++n) direct += 1.0 / static_cast<double>((n + 1) * (n + 1));
  double total = 0.0;
  for (double s : bs.sums) total += s;
  CHECK(total == doctest::Approx(direct).epsilon(1e-12));
  // power(0): every block has 2^N unit terms
  const auto ones = block_sums(expand("power:0", 1 << 12), 10);
  for (std::size_t N = 0; N < ones.sums.size(); ++N) CHECK(ones.sums[N] == std::ldexp(1.0, static_cast<int>(N)));
}

TEST_CASE("dyadic criterion") {
  const auto g = expand("log", kBig);
  const auto same = dyadic_criterion(g, 0.5, 0.5, 14);
  CHECK(same.verdict == Verdict::Bounded);
  CHECK(same.theorem == "2.2");
  CHECK(same.slope == doctest::Approx(-1.0).epsilon(0.05));
  CHECK(!same.inequality.empty());
  CHECK(dyadic_criterion(g, 0.5, 0.4, 14).verdict == Verdict::Unbounded);
  CHECK(dyadic_criterion(g, 0.5, 0.7, 14).verdict == Verdict::Compact);
  CHECK(dyadic_criterion(expand("poly:0,1", 1 << 15), 0.5, 0.5, 14).verdict == Verdict::Compact);
  const auto ones = expand("power:0", kBig);
  CHECK(dyadic_criterion(ones, 0.5, 1.5, 14).verdict == Verdict::Unbounded);
  CHECK_THROWS_AS(dyadic_criterion(g, 2.0, 2.0, 14), DomainError);
}

TEST_CASE("series test") {
  std::vector<double> conv(kBig + 1, 0.0), div(kBig + 1, 0.0);
  for (std::size_t n = 1; n <= kBig; ++n) {
    conv[n] = std::pow(static_cast<double>(n), -2.0);
    div[n] = 1.0;
  }
  CHECK(series_test(conv).outcome == SeriesTest::Outcome::Converged);
  CHECK(series_test(div).outcome == SeriesTest::Outcome::Diverged);
}

TEST_CASE("summability and q-norm criteria") {
  CHECK(summability_criterion(expand("log", kBig), -1.0).verdict == Verdict::Unbounded);
  const auto p = expand("power:-2.1", kBig);
  CHECK(summability_criterion(p, -1.0).verdict == Verdict::Compact);
  CHECK(summability_criterion(expand("power:0", kBig), 3.0).verdict == Verdict::Compact);
  CHECK(qnorm_criterion(p, 2.0).bounded());
  // q < 2: convergence is only necessary, so a convergent series is not a verdict of boundedness
  const auto poly = expand("poly:1,2,3", 1 << 10);
  CHECK(qnorm_criterion(poly, 1.0).verdict == Verdict::Inconclusive);
  CHECK(qnorm_criterion(poly, 2.0).verdict == Verdict::Compact);
  CHECK(qnorm_criterion(expand("log", kBig), 2.0).verdict == Verdict::Unbounded);
}

TEST_CASE("Dirichlet tails") {
  const auto bounded = dirichlet_tail_criterion(expand("powlog:-0.5:-1", kBig), 1.0);
  CHECK(bounded.verdict == Verdict::Bounded);
  const auto compact = dirichlet_tail_criterion(expand("powlog:-0.5:-1.5", kBig), 1.0);
  CHECK(compact.verdict == Verdict::Compact);
  CHECK(dirichlet_tail_criterion(expand("poly:0,1,1", kBig), 1.0).verdict == Verdict::Compact);
}

TEST_CASE("partial-sum laws") {
  const auto r1 = blochlog_partial_sum_criterion(expand("log", kBig), law_lemma43(0.0));
  CHECK(r1.verdict == Verdict::Bounded);
  const auto r2 = blochlog_partial_sum_criterion(expand("powlog:-1:-1", kBig), law_theorem46());
  CHECK(r2.verdict == Verdict::Bounded);
  // b_n = n^{beta-alpha-1} with (alpha, beta) = (0.5, 0.7)
  const auto r3 = blochlog_partial_sum_criterion(expand("power:-0.8", kBig), law_theorem410(0.5, 0.7));
  CHECK(r3.verdict == Verdict::Bounded);
  CHECK(blochlog_partial_sum_criterion(expand("power:0", kBig), law_theorem46()).verdict == Verdict::Unbounded);
  CHECK_THROWS_AS(law_theorem410(1.5, 0.5), DomainError);
}

TEST_CASE("equivalence self-checks") {
  const std::size_t M = std::size_t{1} << 16;
  const std::vector<double> ones(M + 1, 1.0), zeros(M + 1, 0.0);
  CHECK(equivalence_check_lemma44(ones, 1.0, 1.0, 16).consistent());
  const auto z = equivalence_check_lemma44(zeros, 1.0, 1.0, 16);
  CHECK(z.consistent());
  CHECK(z.lhs.back() == 0.0);
  std::vector<double> lg(M + 1);
  for (std::size_t n = 0; n <= M; ++n) lg[n] = std::log(static_cast<double>(n + 1));
  const auto r = equivalence_check_lemma49(lg, 0.0, 1.0, 16);
  CHECK(r.consistent());
  CHECK(!r.lhs_bounded);
}

TEST_CASE("dispatcher") {
  const auto log = SymbolSpec::parse("log");
  CHECK(verdict(log, SpaceSpec::parse("D2:0.5"), SpaceSpec::parse("D2:0.5")).verdict == Verdict::Bounded);
  CHECK(verdict(log, SpaceSpec::parse("D2:0.5"), SpaceSpec::parse("D2:0.4")).verdict == Verdict::Unbounded);
  const auto kor = verdict(log, SpaceSpec::parse("Hinf:0.5"), SpaceSpec::parse("Hinf:0.5"));
  CHECK(kor.verdict == Verdict::Bounded);
  CHECK(kor.theorem == "4.10");
  CHECK_THROWS_AS(verdict(log, SpaceSpec::parse("W"), SpaceSpec::parse("HL:2")), NoTheoremApplies);
}

TEST_CASE("verdict reports round-trip through JSON") {
  const auto r = verdict(SymbolSpec::parse("log"), SpaceSpec::parse("D2:0.5"), SpaceSpec::parse("D2:0.5"));
  const auto j = r.to_json();
  CHECK(VerdictReport::from_json(j).to_json().dump() == j.dump());
  VerdictReport blank;
  CHECK(VerdictReport::from_json(blank.to_json()).to_json() == blank.to_json());
  CHECK(verdict_from_string(to_string(Verdict::Compact)) == Verdict::Compact);
  VerdictReport c;
  c.verdict = Verdict::Compact;
  CHECK(c.bounded());
}

}  // TEST_SUITE
