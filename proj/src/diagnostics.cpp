#include "hgop/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <fmt/format.h>

#include "hgop/error.hpp"
#include "hgop/quadrature.hpp"
#include "hgop/series.hpp"

namespace hgop {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

std::size_t pow2(int j) { return std::size_t{1} << j; }

void require_truncation(const CoefficientSequence& g, std::size_t needed, const char* what) {
  if (g.truncation() < needed)
    throw DomainError(fmt::format("{} needs truncation >= {}, got {}", what, needed, g.truncation()));
}

// |b_n| for symbols whose coefficients are nonnegative up to one common unimodular factor.
std::vector<double> nonnegative_magnitudes(const CoefficientSequence& g) {
  const auto b = g.coeffs();
  Complex phase{};
  for (const auto& c : b) {
    if (c != Complex{}) {
      phase = c / std::abs(c);
      break;
    }
  }
  std::vector<double> m(b.size(), 0.0);
  if (phase == Complex{}) return m;
  for (std::size_t n = 0; n < b.size(); ++n) {
    const Complex rotated = b[n] / phase;
    if (rotated.real() < 0.0 || std::abs(rotated.imag()) > 1e-12 * std::abs(b[n]))
      throw DomainError(fmt::format("negative coefficient at n = {}; the criterion assumes b_n >= 0", n));
    m[n] = std::abs(b[n]);
  }
  return m;
}

VerdictReport series_report(const std::vector<double>& terms, std::string theorem, std::string criterion,
                            std::string inequality, bool compact_on_convergence) {
  const auto st = series_test(terms);
  VerdictReport r;
  r.theorem = std::move(theorem);
  r.criterion = std::move(criterion);
  r.inequality = std::move(inequality);
  r.truncation = terms.size() - 1;
  r.tolerance = 1e-3;
  r.slope = st.last_decade_slope;
  r.target_slope = 0.0;
  r.margin = 1e-3 - st.last_decade_increment;
  r.ratio_band = {st.partial.empty() ? 0.0 : st.partial.front(), st.partial.empty() ? 0.0 : st.partial.back()};
  switch (st.outcome) {
    case SeriesTest::Outcome::Converged:
      r.verdict = compact_on_convergence ? Verdict::Compact : Verdict::Bounded;
      r.notes.push_back(fmt::format("last-decade increment {:.3g} of the total < 1e-3", st.last_decade_increment));
      break;
    case SeriesTest::Outcome::Diverged:
      r.verdict = Verdict::Unbounded;
      r.margin = 0.05 - st.last_decade_slope;
      r.notes.push_back(fmt::format("partial sums grow with log-slope {:.3g} >= 0.05", st.last_decade_slope));
      break;
    case SeriesTest::Outcome::Undecided:
      r.verdict = Verdict::Inconclusive;
      r.notes.push_back(fmt::format("increment {:.3g} and slope {:.3g} decide neither way", st.last_decade_increment,
                                    st.last_decade_slope));
      break;
  }
  r.notes.push_back("ratio_band holds the first and last ladder partial sums");
  return r;
}

}  // namespace

// ---------------------------------------------------------------- dyadic blocks

BlockSeries block_sums(const CoefficientSequence& g, int n_max, int n_fit_min) {
  if (n_max < 1 || n_max > 40) throw DomainError("block index range out of bounds");
  require_truncation(g, pow2(n_max + 1), "dyadic block sums");
  BlockSeries bs;
  bs.n_max = n_max;
  bs.n_fit_min = n_fit_min;
  bs.sums.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int N = 0; N <= n_max; ++N) {
    double s = 0.0;
    for (std::size_t n = pow2(N); n < pow2(N + 1); ++n) s += std::norm(g[n + 1]);
    bs.sums[static_cast<std::size_t>(N)] = s;
  }
  std::vector<double> x, y;
  for (int N = n_fit_min; N <= n_max; ++N) {
    const double s = bs.sums[static_cast<std::size_t>(N)];
    if (s > 0.0) {
      x.push_back(N);
      y.push_back(std::log2(s));
    }
  }
  bs.all_zero = x.empty() || bs.sums.back() == 0.0;
  if (!bs.all_zero && x.size() >= 2) bs.fit = fit_line(x, y);
  return bs;
}

VerdictReport dyadic_criterion(const CoefficientSequence& g, double alpha, double beta, int n_max, double tol) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("the dyadic criterion needs 0 < alpha < 2");
  if (n_max < 6) throw DomainError("the dyadic criterion needs Nmax >= 6");
  const auto bs = block_sums(g, n_max);
  const double tau = beta - alpha - 1.0;
  VerdictReport r;
  r.theorem = "2.2";
  r.criterion = "dyadic block sums S_N = sum_{n=2^N}^{2^(N+1)-1} |b_(n+1)|^2";
  r.truncation = g.truncation();
  r.tolerance = tol;
  r.target_slope = tau;
  r.inequality = fmt::format("slope of log2 S_N over N in [3,{}] <= beta-alpha-1 + {} = {}", n_max, tol, tau + tol);
  if (bs.all_zero) {
    r.verdict = Verdict::Compact;
    r.theorem = "2.3";
    r.slope = -kInfinity;
    r.margin = kInfinity;
    r.ratio_band = {0.0, 0.0};
    r.notes.push_back("block sums vanish at the end of the window (finite rank)");
    return r;
  }
  double lo = kInfinity, hi = 0.0;
  for (int N = 3; N <= n_max; ++N) {
    const double ratio = bs.sums[static_cast<std::size_t>(N)] / std::exp2(N * tau);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  r.ratio_band = {lo, hi};
  r.slope = bs.fit.slope;
  r.margin = tau + tol - r.slope;
  if (bs.fit.residual > 0.25) {
    r.verdict = Verdict::Inconclusive;
    r.notes.push_back(fmt::format("fit residual {:.3g} (log2 units) too large for a power law", bs.fit.residual));
  } else if (r.slope - tau > tol) {
    r.verdict = Verdict::Unbounded;
  } else if (r.slope - tau < -tol) {
    r.verdict = Verdict::Compact;
    r.theorem = "2.3";
    r.notes.push_back("S_N / 2^(N(beta-alpha-1)) decays: o-condition holds");
  } else {
    r.verdict = Verdict::Bounded;
    r.notes.push_back("S_N / 2^(N(beta-alpha-1)) stays in a band: O-condition holds, o-condition does not");
  }
  return r;
}

// ---------------------------------------------------------------- series tests

SeriesTest series_test(const std::vector<double>& terms) {
  if (terms.size() < 21) throw DomainError("series test needs at least 20 terms");
  const std::size_t M = terms.size() - 1;
  std::vector<double> prefix(M + 1, 0.0);
  for (std::size_t n = 1; n <= M; ++n) prefix[n] = prefix[n - 1] + terms[n];
  SeriesTest st;
  for (std::size_t m = 2; m <= M; m <<= 1) {
    st.ladder.push_back(static_cast<double>(m));
    st.partial.push_back(prefix[m]);
  }
  const std::size_t top = static_cast<std::size_t>(st.ladder.back());
  const double total = prefix[top];
  if (total == 0.0) {
    st.outcome = SeriesTest::Outcome::Converged;
    return st;
  }
  st.last_decade_increment = (total - prefix[top / 10]) / total;
  std::vector<double> x, y;
  for (std::size_t i = 0; i < st.ladder.size(); ++i) {
    if (st.ladder[i] * 10.0 >= static_cast<double>(top) && st.partial[i] > 0.0) {
      x.push_back(std::log(st.ladder[i]));
      y.push_back(std::log(st.partial[i]));
    }
  }
  st.last_decade_slope = x.size() >= 2 ? fit_line(x, y).slope : 0.0;
  if (st.last_decade_increment < 1e-3)
    st.outcome = SeriesTest::Outcome::Converged;
  else if (st.last_decade_slope >= 0.05)
    st.outcome = SeriesTest::Outcome::Diverged;
  return st;
}

VerdictReport summability_criterion(const CoefficientSequence& g, double beta) {
  std::vector<double> terms(g.size(), 0.0);
  for (std::size_t n = 1; n < g.size(); ++n) terms[n] = std::pow(static_cast<double>(n), 1.0 - beta) * std::norm(g[n]);
  auto r = series_report(terms, "2.6", "sum n^(1-beta) |b_n|^2",
                         fmt::format("sum_(n>=1) n^(1-{}) |b_n|^2 < infinity", beta), true);
  r.notes.push_back("boundedness and compactness are equivalent for this characterization");
  return r;
}

VerdictReport qnorm_criterion(const CoefficientSequence& g, double q) {
  if (!(q >= 1.0)) throw DomainError("the q-norm criterion needs q >= 1");
  std::vector<double> terms(g.size() + 1, 0.0);
  // Shifted by one so that terms[n+1] holds the (n+1)^(2q-2)|b_n|^q term of index n >= 0.
  for (std::size_t n = 0; n < g.size(); ++n)
    terms[n + 1] = std::pow(static_cast<double>(n + 1), 2.0 * q - 2.0) * std::pow(std::abs(g[n]), q);
  const auto st = series_test(terms);
  auto r = series_report(terms, "2.9", "sum (n+1)^(2q-2) |b_n|^q",
                         fmt::format("sum_(n>=0) (n+1)^(2*{}-2) |b_n|^{} < infinity", q, q), true);
  const bool converged = st.outcome == SeriesTest::Outcome::Converged;
  const bool diverged = st.outcome == SeriesTest::Outcome::Diverged;
  if (q >= 2.0 && converged) {
    r.verdict = Verdict::Compact;
    r.notes.push_back("q >= 2: convergence is sufficient for compactness S^p -> S^q");
  } else if (q <= 2.0 && diverged) {
    r.verdict = Verdict::Unbounded;
    r.notes.push_back("q <= 2: convergence is necessary for boundedness S^p -> S^q and fails");
  } else if (converged) {
    r.verdict = Verdict::Inconclusive;
    r.notes.push_back("q < 2: the series converges, but that is only a necessary condition");
  } else if (diverged) {
    r.verdict = Verdict::Inconclusive;
    r.notes.push_back("q > 2: the series diverges, but convergence is only a sufficient condition");
  }
  if (q == 2.0) r.theorem = "2.8";
  return r;
}

VerdictReport wiener_criterion(const CoefficientSequence& g) {
  std::vector<double> terms(g.size() + 1, 0.0);
  for (std::size_t n = 0; n < g.size(); ++n) terms[n + 1] = std::abs(g[n]);
  auto r = series_report(terms, "2.11", "sum |b_n|", "sum_(n>=0) |b_n| < infinity", true);
  r.notes.push_back("W -> W boundedness and compactness are equivalent");
  return r;
}

VerdictReport bloch_source_criterion(const CoefficientSequence& g, double beta) {
  std::vector<double> terms(g.size() + 1, 0.0);
  for (std::size_t n = 0; n < g.size(); ++n) {
    const double l = std::log1p(static_cast<double>(n));
    terms[n + 1] = std::pow(static_cast<double>(n + 1), 1.0 - beta) * std::norm(g[n]) * l * l;
  }
  auto r = series_report(terms, "R2.10", "sum (n+1)^(1-beta) |b_n|^2 log^2(n+1)",
                         fmt::format("sum_(n>=0) (n+1)^(1-{}) |b_n|^2 log^2(n+1) < infinity", beta), true);
  r.notes.push_back("B -> D2_beta boundedness and compactness are equivalent");
  return r;
}

// ---------------------------------------------------------------- Dirichlet-source tails

TailTrace dirichlet_tails(const CoefficientSequence& g, double beta, int j_min, int j_max) {
  if (j_min < 1 || j_max < j_min) throw DomainError("bad tail ladder");
  require_truncation(g, pow2(j_max + 1), "Dirichlet tails");
  const std::size_t M = g.truncation();
  std::vector<double> s(M + 1, 0.0);
  for (std::size_t n = 1; n <= M; ++n) s[n] = std::pow(static_cast<double>(n), 1.0 - beta) * std::norm(g[n]);

  TailTrace tt;
  // Fit log s_n = c - p log n - q log log n over the last four doublings (log-spaced samples).
  std::vector<double> x1, x2, y;
  const double lo = std::log(static_cast<double>(M) / 16.0), hi = std::log(static_cast<double>(M));
  std::size_t prev = 0;
  for (int i = 0; i <= 256; ++i) {
    const auto n = static_cast<std::size_t>(std::llround(std::exp(lo + (hi - lo) * i / 256.0)));
    if (n == prev || n < 3 || n > M || s[n] <= 0.0) continue;
    prev = n;
    x1.push_back(std::log(static_cast<double>(n)));
    x2.push_back(std::log(std::log(static_cast<double>(n))));
    y.push_back(std::log(s[n]));
  }
  double tail = 0.0;
  if (y.size() >= 8) {
    const auto pf = fit_plane(x1, x2, y);
    double p = -pf.s, q = -pf.t, c = pf.intercept;
    const double LM = std::log(static_cast<double>(M));
    if (std::abs(p - 1.0) <= 0.05) {
      // Snap to p = 1 and refit C and q: log s_n + log n = c - q log log n.
      std::vector<double> yy(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) yy[i] = y[i] + x1[i];
      const auto lf = fit_line(x2, yy);
      p = 1.0;
      q = -lf.slope;
      c = lf.intercept;
      if (!(q > 1.0)) throw DomainError("divergent base sum: tail law n^-1 log^-q n with q <= 1");
      tail = std::exp(c) * std::pow(LM, 1.0 - q) / (q - 1.0);
    } else if (p > 1.0) {
      const double C = std::exp(c);
      auto fn = [&](double v) { return std::exp((1.0 - p) * v - q * std::log(LM + v)); };
      tail = C * std::pow(static_cast<double>(M), 1.0 - p) * integrate(fn, 0.0, 60.0 / (p - 1.0), 1e-10).value;
    } else {
      throw DomainError(fmt::format("divergent base sum: fitted tail exponent p = {:.3g} < 1", p));
    }
    tt.fitted_p = p;
    tt.fitted_q = q;
  }
  tt.extrapolated_tail = tail;
  // Suffix sums from the top down (fixed order).
  std::vector<double> suffix(M + 2, 0.0);
  suffix[M + 1] = tail;
  for (std::size_t n = M; n >= 1; --n) suffix[n] = suffix[n + 1] + s[n];
  for (int j = j_min; j <= j_max; ++j) {
    tt.N.push_back(static_cast<double>(pow2(j)));
    tt.tails.push_back(suffix[pow2(j)]);
  }
  return tt;
}

VerdictReport dirichlet_tail_criterion(const CoefficientSequence& g, double beta, int j_max) {
  const auto base = summability_criterion(g, beta);
  if (base.verdict == Verdict::Unbounded)
    throw DomainError("divergent base sum: the tails sum_(n>=N) n^(1-beta)|b_n|^2 are undefined");
  const auto tt = dirichlet_tails(g, beta, 3, j_max);
  VerdictReport r;
  r.theorem = "2.13";
  r.criterion = "tails T_N = sum_(n>=N) n^(1-beta)|b_n|^2 times log N";
  r.truncation = g.truncation();
  r.tolerance = 0.25;
  r.target_slope = 0.0;
  r.inequality = fmt::format("slope of log(T_N log N) vs log log N over N in [2^3, 2^{}] <= 0.25", j_max);
  r.notes.push_back(fmt::format("tail beyond truncation extrapolated as C n^-{:.4g} log^-{:.4g} n: {:.6g}", tt.fitted_p,
                                tt.fitted_q, tt.extrapolated_tail));
  std::vector<double> x, y;
  double lo = kInfinity, hi = 0.0;
  for (std::size_t i = 0; i < tt.N.size(); ++i) {
    const double v = tt.tails[i] * std::log(tt.N[i]);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    if (v > 0.0) {
      x.push_back(std::log(std::log(tt.N[i])));
      y.push_back(std::log(v));
    }
  }
  r.ratio_band = {lo, hi};
  if (hi == 0.0 || x.size() < 2 || tt.tails.back() == 0.0) {
    r.verdict = Verdict::Compact;
    r.theorem = "2.14";
    r.slope = -kInfinity;
    r.margin = kInfinity;
    r.notes.push_back("tails vanish");
    return r;
  }
  r.slope = fit_line(x, y).slope;
  r.margin = 0.25 - r.slope;
  if (r.slope > 0.25) {
    r.verdict = Verdict::Unbounded;
  } else if (r.slope < -0.25) {
    r.verdict = Verdict::Compact;
    r.theorem = "2.14";
    r.notes.push_back("T_N log N decays: o(1/log N)");
  } else {
    r.verdict = Verdict::Bounded;
    r.notes.push_back("T_N log N stays in a band: O(1/log N) but not o(1/log N)");
  }
  return r;
}

// ---------------------------------------------------------------- partial-sum laws

PartialSumLaw law_lemma43(double alpha) { return {"L4.3", 1.0, alpha}; }
PartialSumLaw law_theorem41() { return {"4.1", 1.0, 0.0}; }
PartialSumLaw law_theorem46() { return {"4.6", 1.0, -1.0}; }
PartialSumLaw law_theorem410(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("the Korenblum route needs 0 < alpha < 1");
  if (!(beta > 0.0)) throw DomainError("the Korenblum route needs beta > 0");
  return {"4.10", 1.0 + beta - alpha, 0.0};
}

VerdictReport blochlog_partial_sum_criterion(const CoefficientSequence& g, const PartialSumLaw& law, int j_max) {
  if (j_max < 6) throw DomainError("partial-sum ladder too short");
  require_truncation(g, pow2(j_max), "partial-sum criterion");
  const auto b = nonnegative_magnitudes(g);
  constexpr double tol_s = 0.05, tol_t = 0.25;
  VerdictReport r;
  r.theorem = law.theorem;
  r.criterion = "partial sums Q_N = sum_(n<=N) n b_n";
  r.truncation = g.truncation();
  r.tolerance = tol_s;
  r.target_slope = law.s;
  r.inequality = fmt::format("Q_N = O(N^{} log^{} N): fitted s <= {} + {}, and t <= {} + {} when |s - {}| <= {}",
                             law.s, law.t, law.s, tol_s, law.t, tol_t, law.s, tol_s);
  std::vector<double> x1, x2, y;
  double Q = 0.0;
  std::size_t n = 1;
  double lo = kInfinity, hi = 0.0;
  for (int j = 3; j <= j_max; ++j) {
    const std::size_t N = pow2(j);
    for (; n <= N; ++n) Q += static_cast<double>(n) * b[n];
    const double LN = std::log(static_cast<double>(N));
    const double ratio = Q / (std::pow(static_cast<double>(N), law.s) * std::pow(LN, law.t));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    if (Q > 0.0) {
      x1.push_back(LN);
      x2.push_back(std::log(LN));
      y.push_back(std::log(Q));
    }
  }
  r.ratio_band = {lo, hi};
  if (y.size() < 3) {
    r.verdict = Verdict::Bounded;
    r.slope = -kInfinity;
    r.margin = kInfinity;
    r.notes.push_back("partial sums vanish on the ladder");
    return r;
  }
  const auto pf = fit_plane(x1, x2, y);
  r.slope = pf.s;
  r.notes.push_back(fmt::format("fitted law N^{:.4f} log^{:.4f} N (residual {:.3g})", pf.s, pf.t, pf.residual));
  const double ds = pf.s - law.s;
  if (ds > tol_s) {
    r.verdict = Verdict::Unbounded;
    r.margin = tol_s - ds;
  } else if (ds < -tol_s) {
    r.verdict = Verdict::Bounded;
    r.margin = tol_s - ds;
  } else {
    r.margin = law.t + tol_t - pf.t;
    r.verdict = pf.t - law.t > tol_t ? Verdict::Unbounded : Verdict::Bounded;
  }
  return r;
}

// ---------------------------------------------------------------- equivalence self-tests

namespace {

EquivalenceReport equivalence(const std::vector<double>& a, int j_max,
                              const std::function<double(std::size_t)>& lhs_weight,
                              const std::function<double(double)>& lhs_norm,
                              const std::function<double(double)>& rhs_norm) {
  if (j_max < 4) throw DomainError("equivalence ladder too short");
  if (a.size() <= pow2(j_max)) throw DomainError("sequence shorter than the ladder");
  for (std::size_t n = 1; n < a.size(); ++n)
    if (a[n] < 0.0) throw DomainError("equivalence checks need a nonnegative sequence");
  EquivalenceReport rep;
  double s1 = 0.0, s2 = 0.0;
  std::size_t n = 1;
  double lo = kInfinity, hi = 0.0;
  for (int j = 1; j <= j_max; ++j) {
    const std::size_t N = pow2(j);
    for (; n <= N; ++n) {
      s1 += a[n] * lhs_weight(n);
      s2 += a[n];
    }
    const double Nd = static_cast<double>(N);
    rep.N.push_back(Nd);
    rep.lhs.push_back(s1 / lhs_norm(Nd));
    rep.rhs.push_back(s2 / rhs_norm(Nd));
    if (rep.lhs.back() > 0.0 && rep.rhs.back() > 0.0) {
      lo = std::min(lo, rep.lhs.back() / rep.rhs.back());
      hi = std::max(hi, rep.lhs.back() / rep.rhs.back());
    }
  }
  rep.ratio_band = {lo == kInfinity ? 0.0 : lo, hi};
  auto slope_of = [&](const std::vector<double>& tr, bool& bounded) {
    std::vector<double> x, y;
    for (std::size_t i = 2; i < tr.size(); ++i) {
      if (tr[i] > 0.0) {
        x.push_back(std::log(std::log(rep.N[i])));
        y.push_back(std::log(tr[i]));
      }
    }
    if (x.size() < 2) {
      bounded = true;
      return 0.0;
    }
    const double s = fit_line(x, y).slope;
    bounded = s <= 0.25;
    return s;
  };
  rep.lhs_slope = slope_of(rep.lhs, rep.lhs_bounded);
  rep.rhs_slope = slope_of(rep.rhs, rep.rhs_bounded);
  return rep;
}

}  // namespace

EquivalenceReport equivalence_check_lemma44(const std::vector<double>& a, double alpha, double beta, int j_max) {
  return equivalence(
      a, j_max, [alpha](std::size_t n) { return std::pow(std::log1p(static_cast<double>(n)), alpha); },
      [beta](double N) { return N * std::pow(std::log(N), beta); },
      [alpha, beta](double N) { return N * std::pow(std::log(N), beta - alpha); });
}

EquivalenceReport equivalence_check_lemma49(const std::vector<double>& a, double s, double t, int j_max) {
  if (!(s >= 0.0)) throw DomainError("the power-weight equivalence needs s >= 0");
  return equivalence(
      a, j_max, [s](std::size_t n) { return std::pow(static_cast<double>(n), s); },
      [t](double N) { return std::pow(N, t); }, [s, t](double N) { return std::pow(N, t - s); });
}

// ---------------------------------------------------------------- dispatcher

namespace {

VerdictReport membership_report(const CoefficientSequence& g, const SpaceSpec& space, const Budget& budget,
                                std::string theorem) {
  MembershipBudget mb;
  mb.depth = budget.depth;
  mb.slope_tolerance = budget.tolerance;
  const auto tr = membership_evidence(g, space, mb);
  VerdictReport r;
  r.theorem = std::move(theorem);
  r.criterion = "symbol membership g in " + space.to_string() + " via weighted growth trace";
  r.truncation = g.truncation();
  r.tolerance = budget.tolerance;
  r.target_slope = 0.0;
  r.slope = tr.slope;
  r.inequality = fmt::format("log-slope of the trace vs log 1/(1-r) on r = 1-2^-j, j <= {}, is <= {}", budget.depth,
                             budget.tolerance);
  if (!tr.values.empty()) {
    const auto [mn, mx] = std::minmax_element(tr.values.begin(), tr.values.end());
    r.ratio_band = {*mn, *mx};
  }
  r.margin = budget.tolerance - tr.slope;
  r.notes.push_back(tr.note);
  switch (tr.status) {
    case TraceStatus::Bounded: r.verdict = Verdict::Bounded; break;
    case TraceStatus::Grows: r.verdict = Verdict::Unbounded; break;
    case TraceStatus::Inconclusive: r.verdict = Verdict::Inconclusive; break;
  }
  return r;
}

using Tag = SpaceSpec::Tag;

// Largest j <= 20 with 2^j inside the truncation.
int ladder_top(const CoefficientSequence& g) {
  int j = 20;
  while (j > 6 && pow2(j) > g.truncation()) --j;
  return j;
}

}  // namespace

VerdictReport verdict(const CoefficientSequence& g, const SpaceSpec& source_in, const SpaceSpec& target_in,
                      const Budget& budget) {
  const SpaceSpec src = source_in.canonical(), dst = target_in.canonical();
  const std::string pair = source_in.to_string() + " -> " + target_in.to_string();
  VerdictReport r;

  if (src.tag == Tag::Dirichlet && dst.tag == Tag::Dirichlet) {
    const double alpha = src.a, beta = dst.a;
    if (alpha >= 2.0)
      throw DomainError("H_g is not well defined on D2_alpha for alpha >= 2");
    if (alpha > 0.0) {
      r = dyadic_criterion(g, alpha, beta, budget.nmax, budget.tolerance);
    } else if (alpha < 0.0) {
      r = summability_criterion(g, beta);
      r.theorem = "2.7";
    } else {
      int j_max = 17;
      while (j_max > 6 && pow2(j_max + 3) > g.truncation()) --j_max;
      r = dirichlet_tail_criterion(g, beta, j_max);
    }
  } else if (src.tag == Tag::Wiener && dst.tag == Tag::Dirichlet) {
    r = summability_criterion(g, dst.a);
  } else if (src.tag == Tag::Wiener && dst.tag == Tag::Wiener) {
    r = wiener_criterion(g);
  } else if (src.is_bloch() && dst.tag == Tag::Dirichlet) {
    r = bloch_source_criterion(g, dst.a);
  } else if (src.tag == Tag::Sp && dst.tag == Tag::Sp) {
    r = qnorm_criterion(g, dst.a);
  } else if (src.tag == Tag::Sp && dst.tag == Tag::Dirichlet && dst.a == -1.0) {
    r = summability_criterion(g, -1.0);
    r.theorem = "2.8";
  } else if (src.is_hinf() && dst.tag == Tag::Xp) {
    r = membership_report(g, dst, budget, "3.1");
  } else if (src.is_hinf() && dst.is_bloch()) {
    r = membership_report(g, SpaceSpec::bloch_beta(1.0), budget, "3.5");
  } else if (src.tag == Tag::BlochLog && dst.tag == Tag::BlochLog && dst.a == src.a + 1.0) {
    if (!(src.a > -1.0)) throw DomainError("the logarithmic Bloch route needs alpha > -1");
    r = blochlog_partial_sum_criterion(g, law_theorem41(), ladder_top(g));
  } else if (src.tag == Tag::BlochBeta && dst.tag == Tag::BlochLog && src.is_bloch() && dst.a == 1.0) {
    r = blochlog_partial_sum_criterion(g, law_theorem41(), ladder_top(g));
  } else if (src.is_bloch() && dst.is_bloch()) {
    r = blochlog_partial_sum_criterion(g, law_theorem46(), ladder_top(g));
  } else if (src.tag == Tag::Korenblum && dst.tag == Tag::Korenblum && src.a > 0.0 && dst.a > 0.0) {
    r = blochlog_partial_sum_criterion(g, law_theorem410(src.a, dst.a), ladder_top(g));
  } else {
    throw NoTheoremApplies("no theorem applies to the space pair " + pair);
  }
  r.notes.insert(r.notes.begin(), "pair " + pair);
  return r;
}

VerdictReport verdict(const SymbolSpec& g, const SpaceSpec& source, const SpaceSpec& target, const Budget& budget) {
  std::size_t n = budget.truncation;
  const bool quadratic = g.kind == SymbolSpec::Kind::LogPow || g.kind == SymbolSpec::Kind::LogLog;
  if (quadratic && n > series::kQuadraticCap) n = series::kQuadraticCap;
  auto r = verdict(expand(g, n), source, target, budget);
  r.notes.insert(r.notes.begin(), "symbol " + g.to_string());
  return r;
}

}  // namespace hgop
