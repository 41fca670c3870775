#pragma once

#include <limits>
#include <string>
#include <vector>

#include "hgop/coefficient_sequence.hpp"

namespace hgop {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// M_p(r, f) for p >= 1 or p = kInfinity. Trapezoid rule on exact FFT samples with the
/// sample count doubled until two successive values agree to 1e-9 relative.
double integral_mean(const CoefficientSequence& f, double p, double r);

/// r_j = 1 - 2^{-j} for j = 0, step, 2·step, ..., depth.
std::vector<double> radius_ladder(double depth, double step = 0.5);

struct TracePoint {
  double x = 0.0;      // radius r, or moment index n
  double value = 0.0;  // left-hand side / trace value
  double ratio = 0.0;  // value / comparison law (when one applies)
};

/// "≍" certification over a trace: band of the ratio and drift of log(ratio) vs
/// log 1/(1-r) over the last decade of 1/(1-r).
struct BandCertificate {
  double min = 0.0;
  double max = 0.0;
  double band = 0.0;   // max / min
  double drift = 0.0;  // fitted slope in the last decade
  bool pass = false;   // band < 100 and |drift| < 0.05
};
BandCertificate certify_band(const std::vector<TracePoint>& trace);

struct Lemma42Params {
  double delta = 0.0;
  double c = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// ∫_0^1 (1-t)^δ (1-tr)^{-1-δ-c} log^β(e/(1-t)) log^γ(e/(1-tr)) dt.
double lemma42_lhs(const Lemma42Params& p, double r);
/// (1-r)^{-c} log^{β+γ}(e/(1-r)).
double lemma42_rhs(const Lemma42Params& p, double r);
std::vector<TracePoint> lemma42_ratio(const Lemma42Params& p, const std::vector<double>& radii);

/// ∫_0^1 t^n log^{α+1}(e/(1-t)) dt.
double moment_integral(double alpha, double n);
/// Ratio of moment_integral to log^{α+1}(e(n+1))/(n+1).
std::vector<TracePoint> moment_asymptotic_ratio(double alpha, const std::vector<double>& ns);

/// Traces of (1-r)^α M_p(r, f) and (1-r)^{α+shift} M_p(r, D^shift f) (q = ∞ mixed norms).
struct ShiftReport {
  std::vector<double> radii;
  std::vector<double> base;     // (1-r)^α M_p(r, f)
  std::vector<double> shifted;  // (1-r)^{α+shift} M_p(r, D^shift f)
  double base_sup = 0.0;
  double shifted_sup = 0.0;
  double ratio_min = 0.0;  // min over r of running-sup ratio shifted/base
  double ratio_max = 0.0;
  std::size_t truncation = 0;
};
ShiftReport mixed_norm_shift_check(const CoefficientSequence& f, double p, double q, double alpha, double shift,
                                   const std::vector<double>& radii);

/// (1-r)·∫_0^1 log log(e^2/(1-t)) (1-tr)^{-2} dt.
double remark47_value(double r);
std::vector<TracePoint> remark47_blowup(const std::vector<double>& radii);
/// Slope of the trace against log log(e^2/(1-r)) over the given radius window.
double remark47_slope(const std::vector<TracePoint>& trace, double r_lo, double r_hi);

}  // namespace hgop
