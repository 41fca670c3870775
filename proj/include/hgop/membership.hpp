#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hgop/coefficient_sequence.hpp"
#include "hgop/space.hpp"

namespace hgop {

/// Radius ladder r_j = 1 - 2^{-j}, j = 1..depth, and the acceptance thresholds for the trace.
struct MembershipBudget {
  int depth = 12;
  double slope_tolerance = 0.05;
  double tail_tolerance = 1e-6;
};

enum class TraceStatus { Bounded, Grows, Inconclusive };
const char* to_string(TraceStatus s);

/// q_j = weighted quantity at r_j whose boundedness is the membership criterion:
///   Lip:p:α  M_p(r, f')(1-r^2)^{1-α}
///   X:1      M_1(r, D^2 f)(1-r)
///   X:p      M_p(r, f')(1-r)^{1-1/p}          (p > 1)
///   B:β, Blog:α, Hinf:α   the weighted sup of the respective seminorm at radius r
/// The log-slope of q_j against log 1/(1-r_j) is fitted over the upper half of the ladder.
struct MembershipTrace {
  std::string space;
  std::vector<double> radii;
  std::vector<double> values;
  double slope = 0.0;
  double tail_bound = 0.0;  // crude geometric bound on the neglected tail at the largest radius, relative
  std::size_t truncation = 0;
  TraceStatus status = TraceStatus::Inconclusive;
  std::string note;
};

MembershipTrace membership_evidence(const CoefficientSequence& f, const SpaceSpec& space,
                                    const MembershipBudget& budget = {});

/// Crude tail bound for the omitted coefficients at radius r, relative to the partial sum:
/// extrapolates |a_N| r^N geometrically: |a_N| r^{N+1}/(1-r) / Σ|a_n| r^n (nonneg weights).
/// Returns 0 when the upper half of the coefficients is exact zero padding (a polynomial).
double geometric_tail_bound(const CoefficientSequence& f, double r);

}  // namespace hgop
