#include "hgop/membership.hpp"

#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "hgop/error.hpp"
#include "hgop/fit.hpp"
#include "hgop/hilbertop.hpp"
#include "hgop/means.hpp"
#include "hgop/norms.hpp"

namespace hgop {

const char* to_string(TraceStatus s) {
  switch (s) {
    case TraceStatus::Bounded: return "Bounded";
    case TraceStatus::Grows: return "Grows";
    case TraceStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

double geometric_tail_bound(const CoefficientSequence& f, double r) {
  const auto a = f.coeffs();
  const std::size_t N = f.truncation();
  // Zero padding over at least the upper half marks an exact polynomial: nothing was cut.
  std::size_t deg = N;
  while (deg > 0 && a[deg] == Complex{}) --deg;
  if (2 * deg <= N && N > 0) return 0.0;
  double partial = 0.0;
  for (std::size_t n = 0; n <= N; ++n) partial += std::abs(a[n]) * std::pow(r, static_cast<double>(n));
  if (partial == 0.0) return 0.0;
  const double last = std::abs(a[N]) * std::pow(r, static_cast<double>(N + 1));
  return last / (1.0 - r) / partial;
}

MembershipTrace membership_evidence(const CoefficientSequence& f, const SpaceSpec& space,
                                    const MembershipBudget& budget) {
  const auto grid = RadialGrid::ladder(budget.depth);
  const SpaceSpec s = space.canonical();
  MembershipTrace t;
  t.space = space.to_string();
  t.radii = grid.radii();
  t.truncation = f.truncation();

  // The sequence that is actually evaluated near the boundary (for the tail bound).
  CoefficientSequence probe = f;
  std::function<double(double)> q;
  switch (s.tag) {
    case SpaceSpec::Tag::MeanLipschitz: {
      probe = derivative_coeffs(f);
      const double p = s.a, alpha = s.b;
      q = [&, p, alpha](double r) { return integral_mean(probe, p, r) * std::pow(1.0 - r * r, 1.0 - alpha); };
      break;
    }
    case SpaceSpec::Tag::Xp: {
      const double p = s.a;
      if (p == 1.0) {
        probe = fractional_derivative(f, 2.0);
        q = [&](double r) { return integral_mean(probe, 1.0, r) * (1.0 - r); };
      } else {
        probe = derivative_coeffs(f);
        q = [&, p](double r) { return integral_mean(probe, p, r) * std::pow(1.0 - r, 1.0 - 1.0 / p); };
      }
      break;
    }
    case SpaceSpec::Tag::BlochBeta: {
      probe = derivative_coeffs(f);
      const double beta = s.a;
      q = [&, beta](double r) { return seminorm_blochbeta(f, beta, RadialGrid({r})).value; };
      break;
    }
    case SpaceSpec::Tag::BlochLog: {
      probe = derivative_coeffs(f);
      const double alpha = s.a;
      q = [&, alpha](double r) { return seminorm_blochlog(f, alpha, RadialGrid({r})).value; };
      break;
    }
    case SpaceSpec::Tag::Korenblum: {
      const double alpha = s.a;
      q = [&, alpha](double r) { return seminorm_korenblum(f, alpha, RadialGrid({r})).value; };
      break;
    }
    default:
      throw DomainError(fmt::format("no growth-trace membership test for space '{}'", t.space));
  }

  t.tail_bound = geometric_tail_bound(probe, grid.radii().back());
  if (t.tail_bound > budget.tail_tolerance) {
    t.status = TraceStatus::Inconclusive;
    t.note = fmt::format("truncation {} too small for r = 1-2^-{}: tail bound {:.3g} > {:.3g}", t.truncation,
                         budget.depth, t.tail_bound, budget.tail_tolerance);
    return t;
  }

  for (double r : t.radii) t.values.push_back(q(r));

  std::vector<double> x, y;
  bool all_zero = true;
  for (std::size_t j = t.radii.size() / 2; j < t.radii.size(); ++j) {
    if (t.values[j] > 0.0) {
      all_zero = false;
      x.push_back(-std::log1p(-t.radii[j]));
      y.push_back(std::log(t.values[j]));
    }
  }
  if (all_zero) {
    t.slope = -kInfinity;
    t.status = TraceStatus::Bounded;
    t.note = "trace vanishes";
    return t;
  }
  if (x.size() < 2) {
    t.status = TraceStatus::Inconclusive;
    t.note = "too few nonzero trace values to fit";
    return t;
  }
  t.slope = fit_line(x, y).slope;
  t.status = t.slope <= budget.slope_tolerance ? TraceStatus::Bounded : TraceStatus::Grows;
  t.note = fmt::format("log-slope {:.4f} vs tolerance {}", t.slope, budget.slope_tolerance);
  return t;
}

}  // namespace hgop
