#include "hgop/fit.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "hgop/error.hpp"

namespace hgop {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) throw DomainError("line fit needs two or more paired points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw DomainError("line fit needs distinct abscissae");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - f.intercept - f.slope * x[i];
    ss += e * e;
  }
  f.residual = std::sqrt(ss / static_cast<double>(n));
  return f;
}

PlaneFit fit_plane(std::span<const double> x1, std::span<const double> x2, std::span<const double> y) {
  const std::size_t n = y.size();
  if (x1.size() != n || x2.size() != n || n < 3) throw DomainError("plane fit needs three or more points");
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd b(n);
  for (std::size_t i = 0; i < n; ++i) {
    A(i, 0) = 1.0;
    A(i, 1) = x1[i];
    A(i, 2) = x2[i];
    b(i) = y[i];
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  if (qr.rank() < 3) throw DomainError("plane fit design matrix is rank deficient");
  const Eigen::Vector3d c = qr.solve(b);
  PlaneFit f{c(1), c(2), c(0), 0.0};
  f.residual = std::sqrt((A * c - b).squaredNorm() / static_cast<double>(n));
  return f;
}

}  // namespace hgop
