#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hgop/coefficient_sequence.hpp"
#include "hgop/fit.hpp"
#include "hgop/membership.hpp"
#include "hgop/space.hpp"
#include "hgop/symbol.hpp"
#include "hgop/verdict.hpp"

namespace hgop {

/// Numerical budget shared by the criteria.
struct Budget {
  std::size_t truncation = std::size_t{1} << 20;  // symbol truncation for series tests
  int nmax = 14;                                  // largest dyadic block index
  double tolerance = 0.05;                        // slope tolerance of dyadic / s-exponent tests
  int depth = 12;                                 // radius ladder depth for membership traces
};

/// S_N = Σ_{n=2^N}^{2^{N+1}-1} |b_{n+1}|^2 for N = 0..n_max, with a fit of log2 S_N vs N
/// over the window [n_fit_min, n_max].
struct BlockSeries {
  int n_fit_min = 3;
  int n_max = 0;
  std::vector<double> sums;  // indexed by N
  LineFit fit;
  bool all_zero = false;  // every block in the fit window vanishes
};
BlockSeries block_sums(const CoefficientSequence& g, int n_max, int n_fit_min = 3);

VerdictReport dyadic_criterion(const CoefficientSequence& g, double alpha, double beta, int n_max,
                               double tol = 0.05);

/// Convergence test for a nonnegative series Σ_{n≥1} term(n), truncated at M.
struct SeriesTest {
  std::vector<double> ladder;  // M_j = 2^j
  std::vector<double> partial;
  double last_decade_increment = 0.0;  // (P_M - P_{M/10}) / P_M
  double last_decade_slope = 0.0;      // d log P / d log M over the last decade
  enum class Outcome { Converged, Diverged, Undecided } outcome = Outcome::Undecided;
};
SeriesTest series_test(const std::vector<double>& terms);  // terms[n], n = 0..M

VerdictReport summability_criterion(const CoefficientSequence& g, double beta);
VerdictReport qnorm_criterion(const CoefficientSequence& g, double q);
VerdictReport wiener_criterion(const CoefficientSequence& g);
VerdictReport bloch_source_criterion(const CoefficientSequence& g, double beta);

/// Tails T_N = Σ_{n≥N} n^{1-β}|b_n|^2 on N = 2^j, j = j_min..j_max, completed beyond the
/// truncation by a fitted C n^{-p} log^{-q} n extrapolation.
struct TailTrace {
  std::vector<double> N;
  std::vector<double> tails;
  double extrapolated_tail = 0.0;  // contribution beyond the truncation
  double fitted_p = 0.0;
  double fitted_q = 0.0;
};
TailTrace dirichlet_tails(const CoefficientSequence& g, double beta, int j_min, int j_max);
VerdictReport dirichlet_tail_criterion(const CoefficientSequence& g, double beta, int j_max = 17);

/// Partial sums Q_N = Σ_{n≤N} n b_n fitted to N^s log^t N and compared with a target law.
struct PartialSumLaw {
  std::string theorem;
  double s = 1.0;
  double t = 0.0;
};
PartialSumLaw law_lemma43(double alpha);                  // g ∈ B_{log^α}
PartialSumLaw law_theorem41();                            // B_{log^α} → B_{log^{α+1}}
PartialSumLaw law_theorem46();                            // B → B
PartialSumLaw law_theorem410(double alpha, double beta);  // H^∞_α → H^∞_β
VerdictReport blochlog_partial_sum_criterion(const CoefficientSequence& g, const PartialSumLaw& law,
                                             int j_max = 20);

/// Two-sided equivalence self-tests: both weighted partial-sum traces and whether each is bounded
/// (log-slope against log log N at most 0.25 over the ladder).
struct EquivalenceReport {
  std::vector<double> N;
  std::vector<double> lhs;  // condition (1) normalized trace
  std::vector<double> rhs;  // condition (2) normalized trace
  double lhs_slope = 0.0;
  double rhs_slope = 0.0;
  bool lhs_bounded = false;
  bool rhs_bounded = false;
  bool consistent() const { return lhs_bounded == rhs_bounded; }
  std::pair<double, double> ratio_band;
};
EquivalenceReport equivalence_check_lemma44(const std::vector<double>& a, double alpha, double beta, int j_max);
EquivalenceReport equivalence_check_lemma49(const std::vector<double>& a, double s, double t, int j_max);

/// Routes a (source, target) pair to the matching characterization. Throws NoTheoremApplies for
/// uncovered pairs and DomainError on hypothesis violations.
VerdictReport verdict(const SymbolSpec& g, const SpaceSpec& source, const SpaceSpec& target,
                      const Budget& budget = {});
VerdictReport verdict(const CoefficientSequence& g, const SpaceSpec& source, const SpaceSpec& target,
                      const Budget& budget = {});

}  // namespace hgop
