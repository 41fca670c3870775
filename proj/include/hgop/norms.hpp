#pragma once

#include <cstddef>
#include <vector>

#include "hgop/coefficient_sequence.hpp"

namespace hgop {

/// Finite set of radii in [0, 1) over which sup-type seminorms are maximized.
class RadialGrid {
 public:
  explicit RadialGrid(std::vector<double> radii);
  /// r_j = 1 - 2^{-j}, j = 1..depth.
  static RadialGrid ladder(int depth);

  const std::vector<double>& radii() const noexcept { return radii_; }

 private:
  std::vector<double> radii_;
};

/// Lower bound for a sup-type seminorm and the grid point where it was attained.
struct SupEstimate {
  double value = 0.0;
  double radius = 0.0;
  double angle = 0.0;
};

/// (|b_0|^2 + Σ_{n≥1} n^{1-α}|b_n|^2)^{1/2}.
double norm_dirichlet(const CoefficientSequence& f, double alpha);
/// Σ |a_n|.
double norm_wiener(const CoefficientSequence& f);
/// (Σ (n+1)^{p-2}|a_n|^p)^{1/p}.
double norm_hl(const CoefficientSequence& f, double p);

/// sup (1-|z|^2)^α |f(z)|; α = 0 gives the H^∞ norm.
SupEstimate seminorm_korenblum(const CoefficientSequence& f, double alpha, const RadialGrid& grid);
/// sup (1-|z|^2) log^{-α}(e/(1-|z|^2)) |f'(z)|.
SupEstimate seminorm_blochlog(const CoefficientSequence& f, double alpha, const RadialGrid& grid);
/// sup (1-|z|^2)^β |f'(z)|.
SupEstimate seminorm_blochbeta(const CoefficientSequence& f, double beta, const RadialGrid& grid);

/// Coefficientwise derivative: (n+1)a_{n+1} as the n-th coefficient.
CoefficientSequence derivative_coeffs(const CoefficientSequence& f);

}  // namespace hgop
