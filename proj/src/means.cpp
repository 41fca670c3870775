#include "hgop/means.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "hgop/circle.hpp"
#include "hgop/error.hpp"
#include "hgop/fit.hpp"
#include "hgop/hilbertop.hpp"
#include "hgop/quadrature.hpp"

namespace hgop {

namespace {

constexpr std::size_t kMaxSamples = std::size_t{1} << 24;

double trapezoid_mean(const std::vector<Complex>& s, double p) {
  // Fixed summation order: ascending sample index.
  double acc = 0.0;
  if (p == 2.0) {
    for (const auto& v : s) acc += std::norm(v);
    return std::sqrt(acc / static_cast<double>(s.size()));
  }
  if (p == 1.0) {
    for (const auto& v : s) acc += std::abs(v);
    return acc / static_cast<double>(s.size());
  }
  for (const auto& v : s) acc += std::pow(std::abs(v), p);
  return std::pow(acc / static_cast<double>(s.size()), 1.0 / p);
}

}  // namespace

double integral_mean(const CoefficientSequence& f, double p, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("integral mean needs 0 <= r < 1");
  if (p == kInfinity) return circle_max(f, r).value;
  if (!(p >= 1.0)) throw DomainError("integral means are supported for p >= 1 only");
  std::size_t K = 64;
  const std::size_t deg = effective_degree(f, r);
  while (K < deg + 1) K <<= 1;
  if (K > kMaxSamples) throw ConvergenceError("effective degree exceeds the sample cap");
  double prev = trapezoid_mean(circle_samples(f, r, K), p);
  while (true) {
    K <<= 1;
    if (K > kMaxSamples) throw ConvergenceError(fmt::format("M_{}(r={}) did not converge within the sample cap", p, r));
    const double cur = trapezoid_mean(circle_samples(f, r, K), p);
    if (std::abs(cur - prev) <= 1e-9 * std::abs(cur) || cur == prev) return cur;
    prev = cur;
  }
}

std::vector<double> radius_ladder(double depth, double step) {
  if (!(step > 0.0) || !(depth >= 0.0) || depth > 52.0) throw DomainError("bad radius ladder");
  std::vector<double> r;
  const int count = static_cast<int>(std::floor(depth / step + 1e-9));
  for (int i = 0; i <= count; ++i) r.push_back(1.0 - std::exp2(-step * i));
  return r;
}

BandCertificate certify_band(const std::vector<TracePoint>& trace) {
  if (trace.size() < 2) throw DomainError("band certification needs at least two points");
  BandCertificate c;
  c.min = trace.front().ratio;
  c.max = trace.front().ratio;
  for (const auto& t : trace) {
    c.min = std::min(c.min, t.ratio);
    c.max = std::max(c.max, t.ratio);
  }
  c.band = c.max / c.min;
  const double L_end = -std::log1p(-trace.back().x);
  std::vector<double> xs, ys;
  for (const auto& t : trace) {
    const double L = -std::log1p(-t.x);
    if (L >= L_end - std::log(10.0) - 1e-12) {
      xs.push_back(L);
      ys.push_back(std::log(t.ratio));
    }
  }
  c.drift = xs.size() >= 2 ? fit_line(xs, ys).slope : 0.0;
  c.pass = c.min > 0.0 && c.band < 100.0 && std::abs(c.drift) < 0.05;
  return c;
}

double lemma42_lhs(const Lemma42Params& p, double r) {
  if (!(p.delta > -1.0)) throw DomainError("lemma 4.2 integral needs delta > -1");
  if (!(p.c > 0.0)) throw DomainError("lemma 4.2 integral needs c > 0");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("lemma 4.2 integral needs 0 <= r < 1");
  const double one_minus_r = 1.0 - r;
  auto weighted = [&](double u) {
    const double q = one_minus_r + r * std::exp(-u);
    double lg = -(p.delta + 1.0) * u - (1.0 + p.delta + p.c) * std::log(q);
    if (p.beta != 0.0) lg += p.beta * std::log1p(u);
    if (p.gamma != 0.0) lg += p.gamma * std::log(1.0 - std::log(q));
    return std::exp(lg);
  };
  const double ustar = -std::log(one_minus_r);
  const double U = ustar + std::max(32.24, 40.0 / (p.delta + 1.0));
  std::vector<double> splits;
  if (ustar > 0.0) splits.push_back(ustar);
  return integrate_unit_interval(weighted, splits, U).value;
}

double lemma42_rhs(const Lemma42Params& p, double r) {
  const double one_minus_r = 1.0 - r;
  return std::pow(one_minus_r, -p.c) * std::pow(1.0 - std::log(one_minus_r), p.beta + p.gamma);
}

std::vector<TracePoint> lemma42_ratio(const Lemma42Params& p, const std::vector<double>& radii) {
  std::vector<TracePoint> out;
  out.reserve(radii.size());
  for (double r : radii) {
    const double lhs = lemma42_lhs(p, r);
    out.push_back({r, lhs, lhs / lemma42_rhs(p, r)});
  }
  return out;
}

double moment_integral(double alpha, double n) {
  if (!(alpha > -1.0)) throw DomainError("moment asymptotics need alpha > -1");
  if (!(n >= 0.0)) throw DomainError("moment index must be nonnegative");
  const double k = alpha + 1.0;
  auto weighted = [&](double u) {
    double lg = -u + k * std::log1p(u);
    if (n > 0.0) {
      if (u == 0.0) return 0.0;
      lg += n * std::log1p(-std::exp(-u));
    }
    return std::exp(lg);
  };
  const double peak = std::log1p(n);
  std::vector<double> splits;
  if (peak > 0.0) splits.push_back(peak);
  // Panels far from the peak underflow; judge them against the expected magnitude.
  const double scale = std::pow(1.0 + peak, k) / (n + 1.0);
  return integrate_unit_interval(weighted, splits, peak + 50.0, 1e-13, 1e-16 * scale).value;
}

std::vector<TracePoint> moment_asymptotic_ratio(double alpha, const std::vector<double>& ns) {
  std::vector<TracePoint> out;
  out.reserve(ns.size());
  for (double n : ns) {
    const double lhs = moment_integral(alpha, n);
    const double rhs = std::pow(1.0 + std::log1p(n), alpha + 1.0) / (n + 1.0);
    out.push_back({n, lhs, lhs / rhs});
  }
  return out;
}

ShiftReport mixed_norm_shift_check(const CoefficientSequence& f, double p, double q, double alpha, double shift,
                                   const std::vector<double>& radii) {
  if (q != kInfinity) throw DomainError("mixed-norm shift check supports q = infinity only");
  if (!(p >= 1.0)) throw DomainError("mixed-norm shift check needs p >= 1");
  if (!(shift > 0.0)) throw DomainError("mixed-norm shift check needs a positive shift");
  if (radii.empty()) throw DomainError("empty radius grid");
  const auto g = fractional_derivative(f, shift);
  ShiftReport rep;
  rep.radii = radii;
  rep.truncation = f.truncation();
  rep.ratio_min = kInfinity;
  rep.ratio_max = 0.0;
  for (double r : radii) {
    const double b = std::pow(1.0 - r, alpha) * integral_mean(f, p, r);
    const double s = std::pow(1.0 - r, alpha + shift) * integral_mean(g, p, r);
    rep.base.push_back(b);
    rep.shifted.push_back(s);
    rep.base_sup = std::max(rep.base_sup, b);
    rep.shifted_sup = std::max(rep.shifted_sup, s);
    if (rep.base_sup > 0.0) {
      const double ratio = rep.shifted_sup / rep.base_sup;
      rep.ratio_min = std::min(rep.ratio_min, ratio);
      rep.ratio_max = std::max(rep.ratio_max, ratio);
    }
  }
  if (rep.ratio_min == kInfinity) rep.ratio_min = 0.0;
  return rep;
}

double remark47_value(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("remark 4.7 trace needs 0 <= r < 1");
  const double one_minus_r = 1.0 - r;
  auto weighted = [&](double u) {
    const double q = one_minus_r + r * std::exp(-u);
    return std::log(2.0 + u) * std::exp(-u - 2.0 * std::log(q));
  };
  const double ustar = -std::log(one_minus_r);
  std::vector<double> splits;
  if (ustar > 0.0) splits.push_back(ustar);
  return one_minus_r * integrate_unit_interval(weighted, splits, ustar + 40.0).value;
}

std::vector<TracePoint> remark47_blowup(const std::vector<double>& radii) {
  std::vector<TracePoint> out;
  for (double r : radii) {
    const double v = remark47_value(r);
    const double law = std::log(2.0 - std::log1p(-r));
    out.push_back({r, v, v / law});
  }
  return out;
}

double remark47_slope(const std::vector<TracePoint>& trace, double r_lo, double r_hi) {
  std::vector<double> xs, ys;
  for (const auto& t : trace) {
    if (t.x < r_lo - 1e-15 || t.x > r_hi + 1e-15) continue;
    xs.push_back(std::log(2.0 - std::log1p(-t.x)));
    ys.push_back(t.value);
  }
  if (xs.size() < 2) throw DomainError("remark 4.7 slope window holds fewer than two radii");
  return fit_line(xs, ys).slope;
}

}  // namespace hgop
