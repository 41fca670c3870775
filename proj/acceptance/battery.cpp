#include "battery.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "hgop/diagnostics.hpp"
#include "hgop/hilbertop.hpp"
#include "hgop/means.hpp"
#include "hgop/opnorm.hpp"
#include "hgop/power_iteration.hpp"
#include "hgop/report.hpp"
#include "hgop/symbol.hpp"
#include "oracles.hpp"

namespace hgop::acceptance {

namespace {

using Artifacts = std::map<std::string, std::string>;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<std::size_t> dyadic_sizes(int lo, int hi) {
  std::vector<std::size_t> N;
  for (int j = lo; j <= hi; ++j) N.push_back((std::size_t{1} << j) - 1);
  return N;
}

std::string curve_csv(const std::vector<NormPoint>& c) {
  CsvTable t({"N", "norm"});
  for (const auto& p : c) t.add_row({std::to_string(p.N), fmt17(p.norm)});
  return t.str();
}

std::string trace_csv(const std::vector<TracePoint>& tr) {
  CsvTable t({"x", "value", "ratio"});
  for (const auto& p : tr) t.add_numbers({p.x, p.value, p.ratio});
  return t.str();
}

CoefficientSequence random_sequence(std::mt19937_64& rng, std::size_t len, bool complex) {
  std::normal_distribution<double> nd;
  std::vector<Complex> c(len);
  for (auto& x : c) x = Complex(nd(rng), complex ? nd(rng) : 0.0);
  return CoefficientSequence(std::move(c));
}

// 1. Classical reduction.
Outcome c1(Artifacts& art) {
  const std::size_t N = std::size_t{1} << 10;
  const auto g = expand("log", N + 1);
  const auto M = matrix(g, N, N);
  std::size_t bad = 0;
  double worst = 0.0;
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t k = 0; k <= N; ++k) {
      const double h = 1.0 / static_cast<double>(n + k + 1);
      const double e = M.entry(n, k).real();
      const double ulp = std::nextafter(h, 2.0) - h;
      const double d = std::abs(e - h) / ulp;
      worst = std::max(worst, d);
      if (d > 1.0) ++bad;
    }
  }
  const auto c = apply(g, expand("poly:1", 0), N);
  std::size_t apply_bad = 0;
  for (std::size_t n = 0; n <= N; ++n)
    if (c[n] != Complex(1.0 / static_cast<double>(n + 1), 0.0)) ++apply_bad;
  art["c1_apply_log_one.csv"] = coefficient_table(c.truncated(16)).str();
  return {bad == 0 && apply_bad == 0,
          fmt::format("N={}: max entry deviation {:.3g} ulp, {} entries > 1 ulp; apply(log,1) mismatches {}", N, worst,
                      bad, apply_bad)};
}

// 2. H_g(1) = (g - g(0))/z.
Outcome c2(Artifacts& art) {
  std::mt19937_64 rng(20240602);
  std::size_t bad = 0;
  std::string log;
  for (int i = 0; i < 20; ++i) {
    const std::size_t len = 16 + static_cast<std::size_t>(rng() % 200);
    const auto g = random_sequence(rng, len, i % 2 == 1);
    const auto c = apply(g, CoefficientSequence(std::vector<Complex>{1.0}), len - 2);
    for (std::size_t n = 0; n + 1 < len; ++n)
      if (c[n] != g[n + 1]) ++bad;
    log += fmt::format("{},{},{}\n", i, len, fmt17(std::abs(c[len - 2])));
  }
  art["c2_identity.csv"] = "case,length,last_abs\n" + log;
  return {bad == 0, fmt::format("20 random symbols, {} coefficient mismatches (bitwise)", bad)};
}

// 3. Corollary 2.4 dichotomy from truncated operator norms.
Outcome c3(Artifacts& art) {
  const auto g = expand("log", (std::size_t{1} << 12) + 1);
  const auto sizes = dyadic_sizes(4, 12);
  bool ok = true;
  std::string detail;
  for (double beta : {0.5, 1.0, 0.3, 0.1}) {
    const auto curve = weighted_norm_curve(g, 0.5, beta, sizes);
    const auto cls = classify_curve(curve);
    const bool want_sat = beta >= 0.5;
    const bool good = want_sat ? cls.shape == CurveShape::Saturating : cls.loglog_slope > 0.05;
    ok = ok && good;
    art[fmt::format("c3_curve_beta_{}.csv", beta)] = curve_csv(curve);
    detail += fmt::format("beta={}: {} (max last increase {:.3f}%, slope {:.3f}) {}; ", beta, to_string(cls.shape),
                          100.0 * cls.max_last_increase, cls.loglog_slope, good ? "ok" : "MISMATCH");
  }
  return {ok, detail};
}

// 4. Dyadic exponent recovery.
Outcome c4(Artifacts& art) {
  bool ok = true;
  std::string detail;
  for (double s : {-1.0, -0.5, 0.0}) {
    const auto g = expand(SymbolSpec::parse(fmt::format("power:{}", s)), std::size_t{1} << 15);
    const auto bs = block_sums(g, 14, 3);
    const bool good = std::abs(bs.fit.slope - (2.0 * s + 1.0)) <= 0.05;
    ok = ok && good;
    CsvTable t({"N", "S_N"});
    for (std::size_t N = 0; N < bs.sums.size(); ++N) t.add_row({std::to_string(N), fmt17(bs.sums[N])});
    art[fmt::format("c4_blocks_s_{}.csv", s)] = t.str();
    detail += fmt::format("s={}: slope {:.4f} (target {}); ", s, bs.fit.slope, 2.0 * s + 1.0);
  }
  return {ok, detail};
}

// 5. Wiener-source equivalence.
Outcome c5(Artifacts& art) {
  const std::size_t Nop = std::size_t{1} << 13;
  const auto g = expand("power:-2.1", Nop + 1);
  const auto sum = summability_criterion(expand("power:-2.1", std::size_t{1} << 20), -1.0);
  const auto decay = wiener_source_decay(g, -1.0, Nop, {0, 64, 256, 1024});
  const double ratio = decay.back().norm / decay.front().norm;
  CsvTable t({"T", "norm"});
  for (const auto& d : decay) t.add_row({std::to_string(d.T), fmt17(d.norm)});
  art["c5_power_decay.csv"] = t.str();
  art["c5_power_summability.json"] = sum.to_json().dump(2);

  const auto lg = summability_criterion(expand("log", std::size_t{1} << 20), -1.0);
  art["c5_log_summability.json"] = lg.to_json().dump(2);
  const auto glog = expand("log", (std::size_t{1} << 12) + 1);
  std::vector<double> norms;
  CsvTable tl({"N", "norm"});
  for (int j = 4; j <= 12; ++j) {
    const std::size_t N = (std::size_t{1} << j) - 1;
    norms.push_back(wiener_source_norm(glog, -1.0, N));
    tl.add_row({std::to_string(N), fmt17(norms.back())});
  }
  art["c5_log_wiener_norms.csv"] = tl.str();
  bool grows = norms.back() > 2.0 * norms.front();
  for (std::size_t i = 1; i < norms.size(); ++i) grows = grows && norms[i] > norms[i - 1];

  const bool ok = sum.verdict == Verdict::Compact && ratio < 1e-2 && lg.verdict == Verdict::Unbounded && grows;
  return {ok, fmt::format("power(-2.1): summability {}, tail/full at T=1024 = {:.4g} (need < 1e-2); "
                          "log: summability {}, Wiener norms {:.4g} -> {:.4g} {}",
                          to_string(sum.verdict), ratio, to_string(lg.verdict), norms.front(), norms.back(),
                          grows ? "growing" : "NOT growing")};
}

// 6. Dirichlet-source tails.
Outcome c6(Artifacts& art) {
  const std::size_t M = std::size_t{1} << 20;
  struct Case {
    const char* spec;
    double k;  // b_n^2 = n^-1 log^-k(n+1)
    Verdict want;
  };
  bool ok = true;
  std::string detail;
  for (const Case& cs : {Case{"powlog:-0.5:-1", 2.0, Verdict::Bounded}, Case{"powlog:-0.5:-1.5", 3.0, Verdict::Compact}}) {
    const auto g = expand(cs.spec, M);
    const auto rep = dirichlet_tail_criterion(g, 1.0, 17);
    const auto tt = dirichlet_tails(g, 1.0, 3, 17);
    double worst = 0.0;
    CsvTable t({"N", "T_N", "oracle"});
    for (std::size_t i = 0; i < tt.N.size(); ++i) {
      const double oracle_v = oracle::log_tail_integral(tt.N[i] - 0.5, cs.k);
      worst = std::max(worst, std::abs(tt.tails[i] / oracle_v - 1.0));
      t.add_numbers({tt.N[i], tt.tails[i], oracle_v});
    }
    art[fmt::format("c6_tails_k{}.csv", cs.k)] = t.str();
    art[fmt::format("c6_verdict_k{}.json", cs.k)] = rep.to_json().dump(2);
    const bool good = rep.verdict == cs.want && worst <= 0.2;
    ok = ok && good;
    detail += fmt::format("log^-{}: {} (want {}), slope {:.3f}, worst oracle deviation {:.2f}%; ", cs.k,
                          to_string(rep.verdict), to_string(cs.want), rep.slope, 100.0 * worst);
  }
  return {ok, detail};
}

// 7. Integral estimate certification.
Outcome c7(Artifacts& art) {
  const Lemma42Params tuples[] = {{0, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}, {1, 0.5, 0, 0}, {0.5, 2, 1, -1}, {0, 1, -1, 1}};
  const auto radii = radius_ladder(20.0, 0.5);
  bool ok = true;
  std::string detail;
  for (const auto& p : tuples) {
    const auto tr = lemma42_ratio(p, radii);
    const auto cert = certify_band(tr);
    ok = ok && cert.pass;
    const std::string key = fmt::format("({},{},{},{})", p.delta, p.c, p.beta, p.gamma);
    art["c7_lemma42_" + key + ".csv"] = trace_csv(tr);
    detail += fmt::format("{}: band {:.3f} drift {:.4f}; ", key, cert.band, cert.drift);
  }
  return {ok, detail};
}

// 8. Moment asymptotics.
Outcome c8(Artifacts& art) {
  std::vector<double> ns{0, 1, 2, 3, 5, 10, 100};
  for (int j = 10; j <= 16; ++j) ns.push_back(std::ldexp(1.0, j));
  ns.push_back(1e5);
  const auto tr = moment_asymptotic_ratio(0.0, ns);
  double worst_eq = 0.0;
  bool band = true;
  for (const auto& p : tr) {
    const auto n = static_cast<std::size_t>(p.x);
    const double exact = (1.0 + oracle::harmonic(n + 1)) / static_cast<double>(n + 1);
    worst_eq = std::max(worst_eq, std::abs(p.value - exact) / exact);
    if (p.x >= 1024.0) band = band && p.ratio >= 0.8 && p.ratio <= 1.3;
  }
  art["c8_moment_ratio.csv"] = trace_csv(tr);
  return {worst_eq <= 1e-10 && band,
          fmt::format("max relative deviation from (1+H_(n+1))/(n+1): {:.3g}; ratio at n=1e5: {:.4f}; band [0.8,1.3] for "
                      "n>=2^10 {}",
                      worst_eq, tr.back().ratio, band ? "holds" : "FAILS")};
}

// 9. Mean-product bound for Hadamard products.
Outcome c9(Artifacts& art) {
  std::mt19937_64 rng(9);
  std::size_t violations = 0, checks = 0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto f = random_sequence(rng, 1 + static_cast<std::size_t>(rng() % 40), true);
    const auto g = random_sequence(rng, 1 + static_cast<std::size_t>(rng() % 40), true);
    const auto h = hadamard(f, g);
    for (double p : {1.0, 2.0, 4.0}) {
      for (double r : {0.3, 0.7, 0.95}) {
        const double lhs = integral_mean(h, p, r * r);
        const double rhs = integral_mean(f, p, r) * integral_mean(g, 1.0, r);
        ++checks;
        worst = std::max(worst, lhs / rhs);
        if (lhs > rhs * (1.0 + 1e-9)) ++violations;
      }
    }
  }
  art["c9_summary.csv"] = fmt::format("checks,violations,max_ratio\n{},{},{}\n", checks, violations, fmt17(worst));
  return {violations == 0, fmt::format("{} checks, {} violations, max LHS/RHS {:.6f}", checks, violations, worst)};
}

// 10. Partial-sum routes of the logarithmic Bloch and Korenblum characterizations.
Outcome c10(Artifacts& art) {
  const std::size_t M = std::size_t{1} << 20;
  const auto inv = expand("log", M);
  std::size_t exact_bad = 0;
  double Q = 0.0;
  for (std::size_t n = 1; n <= M; ++n) {
    Q += static_cast<double>(n) * inv[n].real();
    if (Q != static_cast<double>(n)) ++exact_bad;
  }
  const auto r1 = blochlog_partial_sum_criterion(inv, law_lemma43(0.0));
  const auto r2 = blochlog_partial_sum_criterion(expand("powlog:-1:-1", M), law_theorem46());
  const auto r3 = verdict(SymbolSpec::parse("log"), SpaceSpec::parse("Hinf:0.5"), SpaceSpec::parse("Hinf:0.5"));
  const auto r4 = verdict(SymbolSpec::parse("log"), SpaceSpec::parse("Hinf:0.5"), SpaceSpec::parse("Hinf:0.3"));
  art["c10_lemma43.json"] = r1.to_json().dump(2);
  art["c10_theorem46.json"] = r2.to_json().dump(2);
  art["c10_korenblum_05_05.json"] = r3.to_json().dump(2);
  art["c10_korenblum_05_03.json"] = r4.to_json().dump(2);
  const bool ok = exact_bad == 0 && r1.verdict == Verdict::Bounded && r2.verdict == Verdict::Bounded &&
                  r3.verdict == Verdict::Bounded && r4.verdict == Verdict::Unbounded;
  return {ok, fmt::format("1/n: Q_N = N exact ({} mismatches), {}; 1/(n log(n+1)) B->B: {}; "
                          "Korenblum (0.5,0.5): {}; (0.5,0.3): {}",
                          exact_bad, to_string(r1.verdict), to_string(r2.verdict), to_string(r3.verdict),
                          to_string(r4.verdict))};
}

// 11. Log-log blow-up trace.
Outcome c11(Artifacts& art) {
  std::vector<double> radii;
  for (int i = 0; i <= 20; ++i) radii.push_back(1.0 - std::exp2(-(10.0 + 0.5 * i)));
  const auto tr = remark47_blowup(radii);
  const double slope = remark47_slope(tr, radii.front(), radii.back());
  bool monotone = true;
  for (std::size_t i = 1; i < tr.size(); ++i) monotone = monotone && tr[i].value >= tr[i - 1].value;
  art["c11_remark47.csv"] = trace_csv(tr);
  return {std::abs(slope - 1.0) <= 0.2 && monotone,
          fmt::format("fitted slope {:.4f} (target 1 +- 0.2), trace {}", slope, monotone ? "nondecreasing" : "NOT monotone")};
}

// 12. Power iteration vs the Jacobi oracle.
Outcome c12(Artifacts& art) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> nd;
  double worst = 0.0;
  std::size_t failures = 0;
  CsvTable t({"case", "rows", "cols", "power", "jacobi"});
  for (int i = 0; i < 200; ++i) {
    const auto m = static_cast<Eigen::Index>(1 + rng() % 64), n = static_cast<Eigen::Index>(1 + rng() % 64);
    Eigen::MatrixXd A(m, n);
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index b = 0; b < n; ++b) A(a, b) = nd(rng);
    const auto pw = spectral_norm(A);
    const double ref = oracle::spectral_norm(A);
    const double err = std::abs(pw.norm - ref) / ref;
    worst = std::max(worst, err);
    if (err > 1e-6) ++failures;
    t.add_row({std::to_string(i), std::to_string(m), std::to_string(n), fmt17(pw.norm), fmt17(ref)});
  }
  art["c12_power_vs_jacobi.csv"] = t.str();
  return {failures == 0, fmt::format("200 matrices up to 64x64: {} above 1e-6, worst relative error {:.3g}", failures, worst)};
}

using Fn = Outcome (*)(Artifacts&);

struct Entry {
  int id;
  const char* title;
  Fn fn;
  double limit_seconds;  // 0 = no runtime requirement
};

const Entry kEntries[] = {
    {1, "classical reduction to the Hilbert matrix", c1, 1.0},
    {2, "H_g(1) identity", c2, 0.0},
    {3, "D2_alpha dichotomy from truncated operator norms", c3, 120.0},
    {4, "dyadic exponent recovery", c4, 0.0},
    {5, "Wiener-source equivalence", c5, 0.0},
    {6, "Dirichlet-source tail separation", c6, 0.0},
    {7, "integral estimate certification", c7, 60.0},
    {8, "moment asymptotics", c8, 0.0},
    {9, "Hadamard mean-product bound", c9, 0.0},
    {10, "logarithmic Bloch / Korenblum partial-sum routes", c10, 0.0},
    {11, "log-log blow-up trace", c11, 0.0},
    {12, "power iteration vs independent eigen-solver", c12, 0.0},
};

BatteryResult run_once(const std::function<void(const CriterionResult&)>& progress) {
  BatteryResult br;
  for (const auto& e : kEntries) {
    CriterionResult r;
    r.id = e.id;
    r.title = e.title;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const auto o = e.fn(br.artifacts);
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.limit_seconds > 0.0) {
      const bool in_time = r.seconds < e.limit_seconds;
      r.detail += fmt::format(" [runtime {:.2f}s, limit {}s{}]", r.seconds, e.limit_seconds, in_time ? "" : " EXCEEDED");
      r.pass = r.pass && in_time;
    }
    if (progress) progress(r);
    br.criteria.push_back(std::move(r));
  }
  return br;
}

}  // namespace

bool BatteryResult::all_passed() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return true;
}

BatteryResult run_battery(bool determinism, const std::function<void(const CriterionResult&)>& progress) {
  auto br = run_once(progress);
  if (!determinism) return br;
  CriterionResult r;
  r.id = 13;
  r.title = "determinism of all CSV/JSON outputs";
  const auto t0 = std::chrono::steady_clock::now();
  const auto again = run_once({});
  std::size_t differing = 0;
  for (const auto& [name, text] : br.artifacts) {
    const auto it = again.artifacts.find(name);
    if (it == again.artifacts.end() || it->second != text) ++differing;
  }
  if (again.artifacts.size() != br.artifacts.size()) ++differing;
  r.pass = differing == 0;
  r.detail = fmt::format("{} artifacts compared byte for byte across two runs, {} differ", br.artifacts.size(), differing);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (progress) progress(r);
  br.criteria.push_back(std::move(r));
  return br;
}

std::string format_line(const CriterionResult& r) {
  return fmt::format("[{}] criterion {:>2}: {} -- {}", r.pass ? "PASS" : "FAIL", r.id, r.title, r.detail);
}

}  // namespace hgop::acceptance
