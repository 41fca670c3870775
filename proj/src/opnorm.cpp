#include "hgop/opnorm.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "hgop/error.hpp"
#include "hgop/fit.hpp"
#include "hgop/hilbertop.hpp"

namespace hgop {

namespace {

void check_dense(std::size_t N) {
  const std::size_t n = N + 1;
  if (n > max_dense_entries() / n)
    throw CapacityError(fmt::format("dense {0}x{0} section exceeds the cap of {1} entries", n, max_dense_entries()));
}

template <class Mat, class Entry>
Mat build(double alpha, double beta, std::size_t N, Entry entry) {
  check_dense(N);
  const auto n = static_cast<Eigen::Index>(N + 1);
  Mat A(n, n);
  std::vector<double> row_w(N + 1), col_w(N + 1);
  for (std::size_t i = 0; i <= N; ++i) {
    row_w[i] = std::sqrt(dirichlet_weight(beta, i));
    col_w[i] = 1.0 / std::sqrt(dirichlet_weight(alpha, i));
  }
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index i = 0; i < n; ++i)
      A(i, k) = entry(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) * row_w[i] * col_w[k];
  return A;
}

template <class Mat, class Vec>
std::vector<NormPoint> curve_impl(const CoefficientSequence& g, double alpha, double beta,
                                  const std::vector<std::size_t>& truncations, const PowerOptions& opts, bool complex) {
  std::vector<NormPoint> out;
  if (truncations.empty()) return out;
  if (!std::is_sorted(truncations.begin(), truncations.end()))
    throw DomainError("truncations must be ascending");
  const std::size_t Nmax = truncations.back();
  Mat A;
  if constexpr (std::is_same_v<Mat, Eigen::MatrixXd>) {
    (void)complex;
    A = weighted_matrix(g, alpha, beta, Nmax);
  } else {
    A = weighted_matrix_complex(g, alpha, beta, Nmax);
  }
  Vec warm;
  double running = 0.0;
  for (std::size_t N : truncations) {
    const auto n = static_cast<Eigen::Index>(N + 1);
    Vec start;
    if (warm.size() > 0 && warm.size() <= n) {
      start = Vec::Zero(n);
      start.head(warm.size()) = warm;
      // A little mass on the new coordinates keeps them reachable.
      for (Eigen::Index i = warm.size(); i < n; ++i) start(i) = 1e-3 * std::abs(warm(warm.size() - 1)) + 1e-12;
    }
    const auto res = spectral_norm(A.topLeftCorner(n, n), start, opts);
    warm = res.vector;
    running = std::max(running, res.norm);
    out.push_back({N, running, res.iterations, res.converged});
  }
  return out;
}

template <class Mat, class Vec>
std::vector<TailPoint> decay_impl(const Mat& A, const std::vector<std::size_t>& tails, const PowerOptions& opts) {
  std::vector<TailPoint> out;
  Vec warm;
  const auto n = A.rows();
  for (std::size_t T : tails) {
    const auto t = static_cast<Eigen::Index>(T);
    if (t >= n) {
      out.push_back({T, 0.0, true});
      continue;
    }
    const auto res = spectral_norm(A.bottomRows(n - t), warm, opts);
    warm = res.vector;
    out.push_back({T, res.norm, res.converged});
  }
  return out;
}

}  // namespace

double dirichlet_weight(double alpha, std::size_t n) {
  return std::pow(static_cast<double>(std::max<std::size_t>(n, 1)), 1.0 - alpha);
}

Eigen::MatrixXd weighted_matrix(const CoefficientSequence& g, double alpha, double beta, std::size_t N) {
  if (!g.is_real()) throw DomainError("weighted_matrix needs a real symbol; use weighted_matrix_complex");
  return build<Eigen::MatrixXd>(alpha, beta, N,
                                [&](std::size_t n, std::size_t k) { return operator_entry(g, n, k).real(); });
}

Eigen::MatrixXcd weighted_matrix_complex(const CoefficientSequence& g, double alpha, double beta, std::size_t N) {
  return build<Eigen::MatrixXcd>(alpha, beta, N, [&](std::size_t n, std::size_t k) { return operator_entry(g, n, k); });
}

std::vector<NormPoint> weighted_norm_curve(const CoefficientSequence& g, double alpha, double beta,
                                           const std::vector<std::size_t>& truncations, const PowerOptions& opts) {
  if (g.is_real()) return curve_impl<Eigen::MatrixXd, Eigen::VectorXd>(g, alpha, beta, truncations, opts, false);
  return curve_impl<Eigen::MatrixXcd, Eigen::VectorXcd>(g, alpha, beta, truncations, opts, true);
}

const char* to_string(CurveShape s) {
  switch (s) {
    case CurveShape::Saturating: return "saturating";
    case CurveShape::Growing: return "growing";
    case CurveShape::Undetermined: return "undetermined";
  }
  return "?";
}

CurveClass classify_curve(const std::vector<NormPoint>& curve) {
  CurveClass c;
  if (curve.size() < 4) return c;
  const std::size_t m = curve.size();
  for (std::size_t i = m - 3; i < m; ++i) {
    const double prev = curve[i - 1].norm;
    const double inc = prev > 0.0 ? (curve[i].norm - prev) / prev : 0.0;
    c.max_last_increase = std::max(c.max_last_increase, inc);
  }
  std::vector<double> x, y;
  for (std::size_t i = m - 4; i < m; ++i) {
    if (curve[i].norm > 0.0) {
      x.push_back(std::log(static_cast<double>(curve[i].N + 1)));
      y.push_back(std::log(curve[i].norm));
    }
  }
  if (x.size() >= 2) c.loglog_slope = fit_line(x, y).slope;
  if (c.max_last_increase < 0.005)
    c.shape = CurveShape::Saturating;
  else if (c.loglog_slope > 0.05)
    c.shape = CurveShape::Growing;
  return c;
}

double wiener_source_norm(const CoefficientSequence& g, double beta, std::size_t N) {
  const auto d = wiener_source_decay(g, beta, N, {0});
  return d.front().norm;
}

std::vector<TailPoint> wiener_source_decay(const CoefficientSequence& g, double beta, std::size_t N,
                                           const std::vector<std::size_t>& tail_starts) {
  std::vector<double> w(N + 1);
  for (std::size_t n = 0; n <= N; ++n) w[n] = dirichlet_weight(beta, n);
  std::vector<TailPoint> out;
  for (std::size_t T : tail_starts) {
    double best = 0.0;
    for (std::size_t k = 0; k <= N; ++k) {
      double s = 0.0;
      for (std::size_t n = T; n <= N; ++n) s += w[n] * std::norm(operator_entry(g, n, k));
      best = std::max(best, s);
    }
    out.push_back({T, std::sqrt(best), true});
  }
  return out;
}

std::vector<TailPoint> finite_section_decay(const CoefficientSequence& g, double alpha, double beta, std::size_t n_op,
                                            const std::vector<std::size_t>& tail_starts, const PowerOptions& opts) {
  if (g.is_real())
    return decay_impl<Eigen::MatrixXd, Eigen::VectorXd>(weighted_matrix(g, alpha, beta, n_op), tail_starts, opts);
  return decay_impl<Eigen::MatrixXcd, Eigen::VectorXcd>(weighted_matrix_complex(g, alpha, beta, n_op), tail_starts,
                                                        opts);
}

}  // namespace hgop
