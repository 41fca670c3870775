#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hgop/coefficient_sequence.hpp"
#include "hgop/power_iteration.hpp"

namespace hgop {

/// w_α(n) = max(n,1)^{1-α}: the D²_α weight with index 0 weighted by 1.
double dirichlet_weight(double alpha, std::size_t n);

/// A = Diag(w_β^{1/2}) · M · Diag(w_α^{-1/2}) on indices 0..N (real symbols only).
Eigen::MatrixXd weighted_matrix(const CoefficientSequence& g, double alpha, double beta, std::size_t N);
Eigen::MatrixXcd weighted_matrix_complex(const CoefficientSequence& g, double alpha, double beta, std::size_t N);

struct NormPoint {
  std::size_t N = 0;  // last index of the section (size N+1)
  double norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// ‖A_N‖ for each N in `truncations` (ascending), warm-started from the previous point's vector.
/// The curve is made nondecreasing (finite sections of nested forms) by carrying the running max.
std::vector<NormPoint> weighted_norm_curve(const CoefficientSequence& g, double alpha, double beta,
                                           const std::vector<std::size_t>& truncations, const PowerOptions& opts = {});

enum class CurveShape { Saturating, Growing, Undetermined };
const char* to_string(CurveShape s);

struct CurveClass {
  CurveShape shape = CurveShape::Undetermined;
  double max_last_increase = 0.0;  // largest relative increase over the last three doublings
  double loglog_slope = 0.0;       // fitted over the last four points
};
/// Saturating: each of the last three relative increases < 0.5%. Growing: log-log slope > 0.05.
CurveClass classify_curve(const std::vector<NormPoint>& curve);

/// sup_k ‖column_k‖_{D²_β}: exact operator norm W → D²_β of the (N+1)×(N+1) section.
double wiener_source_norm(const CoefficientSequence& g, double beta, std::size_t N);

struct TailPoint {
  std::size_t T = 0;
  double norm = 0.0;
  bool converged = true;
};

/// Wiener-source norms of the section with rows < T removed, for each T.
std::vector<TailPoint> wiener_source_decay(const CoefficientSequence& g, double beta, std::size_t N,
                                           const std::vector<std::size_t>& tail_starts);

/// ‖H_g - H_g^T‖ on D²_α → D²_β: spectral norm of rows T..N_op of the weighted section.
std::vector<TailPoint> finite_section_decay(const CoefficientSequence& g, double alpha, double beta, std::size_t n_op,
                                            const std::vector<std::size_t>& tail_starts,
                                            const PowerOptions& opts = {});

}  // namespace hgop
