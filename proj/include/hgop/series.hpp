#pragma once

#include <cstddef>
#include <vector>

namespace hgop::series {

/// Largest truncation accepted by the O(N^2) series routines below.
inline constexpr std::size_t kQuadraticCap = std::size_t{1} << 16;

/// Truncated Cauchy product of two real power series.
std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b, std::size_t n);

/// u^p for a real power series with u[0] > 0 (J.C.P. Miller recurrence).
std::vector<double> power(const std::vector<double>& u, double p, std::size_t n);

/// log(u) for a real power series with u[0] > 0.
std::vector<double> log(const std::vector<double>& u, std::size_t n);

}  // namespace hgop::series
