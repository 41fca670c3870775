#pragma once

#include <cstddef>
#include <vector>

#include "hgop/coefficient_sequence.hpp"

namespace hgop {

/// Values of the partial sum at K equispaced points r·e^{2πij/K}, j = 0..K-1.
///
/// Coefficients are folded modulo K before a single FFT, so every sample is
/// the exact value of the truncated polynomial (no aliasing error), for any K.
std::vector<Complex> circle_samples(const CoefficientSequence& f, double r, std::size_t K);

/// Largest index n with r^n |a_n| above a relative 1e-17 floor; the effective degree at radius r.
std::size_t effective_degree(const CoefficientSequence& f, double r);

/// Sup of |f| on the circle of radius r: FFT sampling followed by Brent refinement
/// around the best sample. Exact (θ = 0) for nonnegative real coefficients.
struct CircleMax {
  double value = 0.0;
  double angle = 0.0;
};
CircleMax circle_max(const CoefficientSequence& f, double r);

}  // namespace hgop
