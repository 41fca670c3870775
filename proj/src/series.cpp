#include "hgop/series.hpp"

#include <cmath>

#include "hgop/error.hpp"

namespace hgop::series {

namespace {

void check_size(std::size_t n) {
  if (n > kQuadraticCap) throw CapacityError("series truncation above the quadratic-cost cap");
}

double at(const std::vector<double>& u, std::size_t k) { return k < u.size() ? u[k] : 0.0; }

}  // namespace

std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b, std::size_t n) {
  check_size(n);
  std::vector<double> c(n + 1, 0.0);
  for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    const std::size_t jmax = std::min(n - i, b.size() - 1);
    for (std::size_t j = 0; j <= jmax; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::vector<double> power(const std::vector<double>& u, double p, std::size_t n) {
  check_size(n);
  const double u0 = at(u, 0);
  if (!(u0 > 0.0)) throw DomainError("series power needs a positive constant term");
  std::vector<double> f(n + 1, 0.0);
  f[0] = std::pow(u0, p);
  for (std::size_t m = 1; m <= n; ++m) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= m; ++k) {
      const double uk = at(u, k);
      if (uk == 0.0) continue;
      acc += ((p + 1.0) * static_cast<double>(k) - static_cast<double>(m)) * uk * f[m - k];
    }
    f[m] = acc / (static_cast<double>(m) * u0);
  }
  return f;
}

std::vector<double> log(const std::vector<double>& u, std::size_t n) {
  check_size(n);
  const double u0 = at(u, 0);
  if (!(u0 > 0.0)) throw DomainError("series log needs a positive constant term");
  std::vector<double> f(n + 1, 0.0);
  f[0] = std::log(u0);
  for (std::size_t m = 1; m <= n; ++m) {
    double acc = static_cast<double>(m) * at(u, m);
    for (std::size_t k = 1; k < m; ++k) acc -= static_cast<double>(k) * f[k] * at(u, m - k);
    f[m] = acc / (static_cast<double>(m) * u0);
  }
  return f;
}

}  // namespace hgop::series
