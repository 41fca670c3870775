#pragma once

#include <span>

namespace hgop {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root-mean-square residual
};

/// Least squares y ≈ intercept + slope·x. Needs at least two distinct x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

struct PlaneFit {
  double s = 0.0;  // coefficient of x1
  double t = 0.0;  // coefficient of x2
  double intercept = 0.0;
  double residual = 0.0;
};

/// Least squares y ≈ intercept + s·x1 + t·x2 (Householder QR).
PlaneFit fit_plane(std::span<const double> x1, std::span<const double> x2, std::span<const double> y);

}  // namespace hgop
