#include "hgop/norms.hpp"

#include <cmath>

#include "hgop/circle.hpp"
#include "hgop/error.hpp"

namespace hgop {

RadialGrid::RadialGrid(std::vector<double> radii) : radii_(std::move(radii)) {
  if (radii_.empty()) throw DomainError("radial grid is empty");
  for (double r : radii_)
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("grid radius must lie in [0, 1)");
}

RadialGrid RadialGrid::ladder(int depth) {
  if (depth < 1 || depth > 52) throw DomainError("ladder depth must lie in [1, 52]");
  std::vector<double> r;
  for (int j = 1; j <= depth; ++j) r.push_back(1.0 - std::ldexp(1.0, -j));
  return RadialGrid(std::move(r));
}

double norm_dirichlet(const CoefficientSequence& f, double alpha) {
  const auto c = f.coeffs();
  double s = std::norm(c[0]);
  for (std::size_t n = 1; n < c.size(); ++n) s += std::pow(static_cast<double>(n), 1.0 - alpha) * std::norm(c[n]);
  return std::sqrt(s);
}

double norm_wiener(const CoefficientSequence& f) {
  double s = 0.0;
  for (const auto& c : f.coeffs()) s += std::abs(c);
  return s;
}

double norm_hl(const CoefficientSequence& f, double p) {
  if (!(p >= 1.0)) throw DomainError("HL(p) needs p >= 1");
  const auto c = f.coeffs();
  double s = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n)
    s += std::pow(static_cast<double>(n + 1), p - 2.0) * std::pow(std::abs(c[n]), p);
  return std::pow(s, 1.0 / p);
}

CoefficientSequence derivative_coeffs(const CoefficientSequence& f) {
  const auto c = f.coeffs();
  if (c.size() == 1) return CoefficientSequence();
  std::vector<Complex> d(c.size() - 1);
  for (std::size_t n = 0; n + 1 < c.size(); ++n) d[n] = static_cast<double>(n + 1) * c[n + 1];
  return CoefficientSequence(std::move(d));
}

namespace {

template <class Weight>
SupEstimate weighted_sup(const CoefficientSequence& f, const RadialGrid& grid, Weight weight) {
  SupEstimate best;
  for (double r : grid.radii()) {
    const auto m = circle_max(f, r);
    const double v = weight(r) * m.value;
    if (v > best.value) best = {v, r, m.angle};
  }
  return best;
}

}  // namespace

SupEstimate seminorm_korenblum(const CoefficientSequence& f, double alpha, const RadialGrid& grid) {
  if (!(alpha >= 0.0)) throw DomainError("Korenblum weight needs alpha >= 0");
  return weighted_sup(f, grid, [alpha](double r) { return std::pow((1.0 - r) * (1.0 + r), alpha); });
}

SupEstimate seminorm_blochlog(const CoefficientSequence& f, double alpha, const RadialGrid& grid) {
  const auto d = derivative_coeffs(f);
  return weighted_sup(d, grid, [alpha](double r) {
    const double w = (1.0 - r) * (1.0 + r);
    return w * std::pow(1.0 - std::log(w), -alpha);
  });
}

SupEstimate seminorm_blochbeta(const CoefficientSequence& f, double beta, const RadialGrid& grid) {
  if (!(beta > 0.0)) throw DomainError("Bloch-type weight needs beta > 0");
  const auto d = derivative_coeffs(f);
  return weighted_sup(d, grid, [beta](double r) { return std::pow((1.0 - r) * (1.0 + r), beta); });
}

}  // namespace hgop
