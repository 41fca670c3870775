#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "battery.hpp"
#include "hgop/diagnostics.hpp"
#include "hgop/error.hpp"
#include "hgop/hilbertop.hpp"
#include "hgop/means.hpp"
#include "hgop/norms.hpp"
#include "hgop/opnorm.hpp"
#include "hgop/report.hpp"
#include "hgop/space.hpp"
#include "hgop/symbol.hpp"

namespace hgop::cli {

namespace {

using Json = nlohmann::ordered_json;

// Collected report of one subcommand. Tables are filled row by row so that a
// numerical failure still emits everything computed before it.
struct Output {
  Json doc = Json::object();
  std::string text;
  std::optional<CsvTable> table;
  std::string table_key = "rows";
  std::vector<std::string> trailer;  // "# ..." lines after the CSV
  int code = kOk;

  void emit(std::ostream& out, bool json) {
    if (json) {
      if (table) doc[table_key] = table->to_json();
      out << doc.dump(2) << '\n';
      return;
    }
    out << text;
    if (table) out << table->str();
    for (const auto& t : trailer) out << "# " << t << '\n';
  }
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

Budget parse_budget(const std::string& text) {
  Budget b;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("budget entry needs key=value: " + item);
    const auto key = trim(item.substr(0, eq));
    const auto value = trim(item.substr(eq + 1));
    if (key == "truncation") {
      b.truncation = parse_size(value);
    } else if (key == "nmax") {
      b.nmax = static_cast<int>(parse_size(value));
    } else if (key == "depth") {
      b.depth = static_cast<int>(parse_size(value));
    } else if (key == "tolerance") {
      b.tolerance = std::stod(value);
    } else {
      throw ParseError("unknown budget key: " + key);
    }
  }
  return b;
}

// ---- subcommand state -------------------------------------------------------

struct NormArgs {
  std::string symbol, space;
  std::string N = "2^12";
  int depth = 20;
};

struct ApplyArgs {
  std::string g, f, out_path;
  std::string N = "16";
  std::string K = "2^12";
};

struct VerdictArgs {
  std::string g, from, to, budget;
};

struct OpnormArgs {
  std::string g;
  double alpha = 0.0, beta = 0.0;
  std::string truncations = "2^4..2^12";
};

struct DecayArgs {
  std::string g;
  double alpha = 0.0, beta = 0.0;
  std::string n_op = "2^10";
  std::string tails = "0,16,64,256";
  bool wiener = false;
};

struct MeansArgs {
  std::string f;
  std::string p = "2";
  double r_depth = 20.0, step = 0.5;
  std::string N = "2^12";
};

struct VerifyArgs {
  double delta = 0.0, c = 1.0, beta = 0.0, gamma = 0.0;
  double depth = 20.0, step = 0.5;
  double alpha = 0.0;
  std::string nmax = "1e5";
  std::string f = "log";
  std::string p = "1";
  double shift = 1.0;
  double shift_alpha = 1.0;
  std::string N = "2^12";
  double depth_lo = 10.0, depth_hi = 20.0;
};

struct SuiteArgs {
  std::string artifacts;
  bool no_determinism = false;
};

// ---- handlers ---------------------------------------------------------------

void do_norm(const NormArgs& a, Output& o) {
  const auto f = expand(a.symbol, parse_size(a.N));
  const auto space = SpaceSpec::parse(a.space);
  o.doc["command"] = "norm";
  o.doc["symbol"] = a.symbol;
  o.doc["space"] = space.to_string();
  o.doc["truncation"] = f.truncation();
  double value = 0.0;
  std::optional<SupEstimate> sup;
  const auto grid = [&] { return RadialGrid::ladder(a.depth); };
  switch (space.tag) {
    case SpaceSpec::Tag::Dirichlet: value = norm_dirichlet(f, space.a); break;
    case SpaceSpec::Tag::Wiener: value = norm_wiener(f); break;
    case SpaceSpec::Tag::HardyLittlewood: value = norm_hl(f, space.a); break;
    case SpaceSpec::Tag::Korenblum: sup = seminorm_korenblum(f, space.a, grid()); break;
    case SpaceSpec::Tag::BlochLog: sup = seminorm_blochlog(f, space.a, grid()); break;
    case SpaceSpec::Tag::BlochBeta: sup = seminorm_blochbeta(f, space.a, grid()); break;
    default: throw DomainError("no norm is implemented for " + space.to_string());
  }
  if (sup) {
    value = sup->value;
    o.doc["radius"] = sup->radius;
    o.doc["angle"] = sup->angle;
    o.doc["depth"] = a.depth;
  }
  o.doc["value"] = value;
  o.text = fmt17(value) + "\n";
}

void do_apply(const ApplyArgs& a, Output& o, std::ostream& err) {
  const std::size_t N = parse_size(a.N);
  const auto g = expand(a.g, N + 1);
  const auto f = expand(a.f, parse_size(a.K));
  const auto c = apply(g, f, N);
  auto table = coefficient_table(c);
  o.doc["command"] = "apply";
  o.doc["g"] = a.g;
  o.doc["f"] = a.f;
  o.doc["truncation"] = N;
  o.table_key = "coefficients";
  if (!a.out_path.empty()) {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) throw DomainError("cannot write " + a.out_path);
    file << table.str();
    o.doc["out"] = a.out_path;
    err << "wrote " << c.size() << " coefficients to " << a.out_path << '\n';
    return;
  }
  o.table = std::move(table);
}

void do_verdict(const VerdictArgs& a, Output& o) {
  const auto budget = parse_budget(a.budget);
  const auto report = verdict(SymbolSpec::parse(a.g), SpaceSpec::parse(a.from), SpaceSpec::parse(a.to), budget);
  o.doc = report.to_json();
  o.text = o.doc.dump(2) + "\n";
}

void do_opnorm(const OpnormArgs& a, Output& o) {
  std::vector<std::size_t> Ns;
  for (std::size_t T : parse_sizes(a.truncations)) {
    if (T == 0) throw DomainError("section sizes must be positive");
    Ns.push_back(T - 1);
  }
  const std::size_t top = *std::max_element(Ns.begin(), Ns.end());
  const auto g = expand(a.g, top + 1);
  o.doc["command"] = "opnorm";
  o.doc["g"] = a.g;
  o.doc["alpha"] = a.alpha;
  o.doc["beta"] = a.beta;
  o.doc["truncations"] = a.truncations;
  o.table.emplace(std::vector<std::string>{"N", "norm"});
  o.table_key = "curve";
  const auto curve = weighted_norm_curve(g, a.alpha, a.beta, Ns);
  for (const auto& p : curve) o.table->add_row({std::to_string(p.N), fmt17(p.norm)});
  if (curve.size() >= 4) {
    const auto cls = classify_curve(curve);
    o.doc["shape"] = to_string(cls.shape);
    o.doc["max_last_increase"] = cls.max_last_increase;
    o.doc["loglog_slope"] = cls.loglog_slope;
  }
}

void do_decay(const DecayArgs& a, Output& o) {
  const std::size_t n_op = parse_size(a.n_op);
  const auto tails = parse_sizes(a.tails);
  const auto g = expand(a.g, n_op + 1);
  o.doc["command"] = "decay";
  o.doc["g"] = a.g;
  o.doc["source"] = a.wiener ? "W" : fmt::format("D2:{}", a.alpha);
  o.doc["beta"] = a.beta;
  o.doc["n_op"] = n_op;
  o.table.emplace(std::vector<std::string>{"T", "norm", "relative", "converged"});
  o.table_key = "tails";
  const auto pts = a.wiener ? wiener_source_decay(g, a.beta, n_op, tails)
                            : finite_section_decay(g, a.alpha, a.beta, n_op, tails);
  const double ref = pts.empty() ? 0.0 : pts.front().norm;
  for (const auto& p : pts)
    o.table->add_row({std::to_string(p.T), fmt17(p.norm), fmt17(ref > 0.0 ? p.norm / ref : 0.0),
                      p.converged ? "1" : "0"});
}

void do_means(const MeansArgs& a, Output& o) {
  const auto f = expand(a.f, parse_size(a.N));
  const double p = parse_exponent(a.p);
  o.doc["command"] = "means";
  o.doc["f"] = a.f;
  o.doc["p"] = a.p;
  o.table.emplace(std::vector<std::string>{"r", "M_p"});
  o.table_key = "means";
  for (double r : radius_ladder(a.r_depth, a.step)) o.table->add_numbers({r, integral_mean(f, p, r)});
}

void trace_table(Output& o, const std::vector<TracePoint>& tr, const char* x) {
  o.table.emplace(std::vector<std::string>{x, "value", "ratio"});
  o.table_key = "trace";
  for (const auto& p : tr) o.table->add_numbers({p.x, p.value, p.ratio});
}

void certify(Output& o, bool pass, const std::string& rule) {
  o.doc["pass"] = pass;
  o.doc["rule"] = rule;
  o.trailer.push_back(fmt::format("{}: {}", pass ? "PASS" : "FAIL", rule));
  if (!pass) o.code = kFailed;
}

void do_verify_lemma42(const VerifyArgs& a, Output& o) {
  const Lemma42Params p{a.delta, a.c, a.beta, a.gamma};
  o.doc["command"] = "verify lemma42";
  o.doc["params"] = {{"delta", p.delta}, {"c", p.c}, {"beta", p.beta}, {"gamma", p.gamma}};
  const auto tr = lemma42_ratio(p, radius_ladder(a.depth, a.step));
  trace_table(o, tr, "r");
  const auto cert = certify_band(tr);
  o.doc["band"] = {{"min", cert.min}, {"max", cert.max}, {"ratio", cert.band}, {"drift", cert.drift}};
  certify(o, cert.pass,
          fmt::format("band max/min = {:.6g} < 100 and |drift| = {:.3g} < 0.05", cert.band, std::abs(cert.drift)));
}

void do_verify_moment(const VerifyArgs& a, Output& o) {
  const double nmax = static_cast<double>(parse_size(a.nmax));
  std::vector<double> ns{0.0};
  for (double n = 1.0; n < nmax; n *= 2.0) ns.push_back(n);
  ns.push_back(nmax);
  o.doc["command"] = "verify moment";
  o.doc["alpha"] = a.alpha;
  const auto tr = moment_asymptotic_ratio(a.alpha, ns);
  trace_table(o, tr, "n");
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& p : tr) {
    if (p.x < 1024.0) continue;
    lo = std::min(lo, p.ratio);
    hi = std::max(hi, p.ratio);
  }
  certify(o, lo >= 0.8 && hi <= 1.3, fmt::format("ratio in [0.8, 1.3] for n >= 2^10 (observed [{:.6g}, {:.6g}])", lo, hi));
}

void do_verify_shift(const VerifyArgs& a, Output& o) {
  const auto f = expand(a.f, parse_size(a.N));
  const double p = parse_exponent(a.p);
  o.doc["command"] = "verify shift";
  o.doc["f"] = a.f;
  o.doc["p"] = a.p;
  o.doc["alpha"] = a.shift_alpha;
  o.doc["shift"] = a.shift;
  const auto rep = mixed_norm_shift_check(f, p, kInfinity, a.shift_alpha, a.shift, radius_ladder(a.depth, a.step));
  o.table.emplace(std::vector<std::string>{"r", "base", "shifted"});
  o.table_key = "trace";
  for (std::size_t i = 0; i < rep.radii.size(); ++i) o.table->add_numbers({rep.radii[i], rep.base[i], rep.shifted[i]});
  o.doc["base_sup"] = rep.base_sup;
  o.doc["shifted_sup"] = rep.shifted_sup;
  o.doc["ratio_band"] = {rep.ratio_min, rep.ratio_max};
  const bool finite = std::isfinite(rep.base_sup) && std::isfinite(rep.shifted_sup) && rep.ratio_min > 0.0;
  const double band = finite ? rep.ratio_max / rep.ratio_min : INFINITY;
  certify(o, finite && band < 100.0,
          fmt::format("finite sups and ratio band [{:.6g}, {:.6g}] with max/min < 100", rep.ratio_min, rep.ratio_max));
}

void do_verify_remark47(const VerifyArgs& a, Output& o) {
  if (!(a.depth_hi > a.depth_lo)) throw DomainError("remark47 needs depth-hi > depth-lo");
  std::vector<double> radii;
  for (double d = a.depth_lo; d <= a.depth_hi + 1e-9; d += a.step) radii.push_back(1.0 - std::exp2(-d));
  o.doc["command"] = "verify remark47";
  const auto tr = remark47_blowup(radii);
  trace_table(o, tr, "r");
  const double slope = remark47_slope(tr, radii.front(), radii.back());
  bool monotone = true;
  for (std::size_t i = 1; i < tr.size(); ++i) monotone = monotone && tr[i].value >= tr[i - 1].value;
  o.doc["slope"] = slope;
  o.doc["monotone"] = monotone;
  certify(o, monotone && std::abs(slope - 1.0) <= 0.2,
          fmt::format("nondecreasing trace and slope vs log log(e^2/(1-r)) = {:.6g} within 1 +- 0.2", slope));
}

void do_suite(const SuiteArgs& a, Output& o, std::ostream& out, bool json) {
  const auto result = acceptance::run_battery(!a.no_determinism, [&](const acceptance::CriterionResult& r) {
    if (!json) out << acceptance::format_line(r) << std::endl;
  });
  Json arr = Json::array();
  std::size_t passed = 0;
  for (const auto& c : result.criteria) {
    passed += c.pass ? 1 : 0;
    arr.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
  }
  o.doc["command"] = "suite acceptance";
  o.doc["criteria"] = std::move(arr);
  o.doc["passed"] = passed;
  o.doc["total"] = result.criteria.size();
  o.text = fmt::format("{}/{} acceptance criteria passed\n", passed, result.criteria.size());
  if (!a.artifacts.empty()) {
    for (const auto& [name, body] : result.artifacts) {
      std::ofstream file(a.artifacts + "/" + name, std::ios::binary);
      if (!file) throw DomainError("cannot write artifacts to " + a.artifacts);
      file << body;
    }
    o.doc["artifacts"] = a.artifacts;
  }
  if (!result.all_passed()) o.code = kFailed;
}

}  // namespace

std::size_t parse_size(const std::string& text) {
  const auto t = trim(text);
  double v = 0.0;
  try {
    std::size_t used = 0;
    const auto caret = t.find('^');
    if (caret != std::string::npos) {
      const double base = std::stod(t.substr(0, caret), &used);
      if (used != caret) throw ParseError("");
      const auto exp_text = t.substr(caret + 1);
      const double e = std::stod(exp_text, &used);
      if (used != exp_text.size()) throw ParseError("");
      v = std::pow(base, e);
    } else {
      v = std::stod(t, &used);
      if (used != t.size()) throw ParseError("");
    }
  } catch (const std::exception&) {
    throw ParseError("not a size: '" + text + "'");
  }
  if (!(v >= 0.0) || v != std::floor(v) || v > 9.007199254740992e15) throw ParseError("not a size: '" + text + "'");
  return static_cast<std::size_t>(v);
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::size_t lo = parse_size(text.substr(0, dots));
    const std::size_t hi = parse_size(text.substr(dots + 2));
    if (lo == 0 || hi < lo) throw ParseError("bad size range: '" + text + "'");
    for (std::size_t s = lo; s <= hi; s *= 2) out.push_back(s);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_size(item));
  if (out.empty()) throw ParseError("empty size list");
  return out;
}

double parse_exponent(const std::string& text) {
  const auto t = trim(text);
  if (t == "inf" || t == "Inf" || t == "infinity") return kInfinity;
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used == t.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("not an exponent: '" + text + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Hilbert operators: evaluation, norms, boundedness verdicts"};
  app.set_config("--config", "", "key=value file mirroring the flags (sections per subcommand)");
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a single JSON document on stdout");

  NormArgs na;
  auto* norm = app.add_subcommand("norm", "norm or seminorm of a symbol in a space");
  norm->add_option("symbol", na.symbol, "symbol spec, e.g. log or power:-1")->required();
  norm->add_option("--space", na.space, "space spec, e.g. D2:0.5")->required();
  norm->add_option("-N", na.N, "truncation")->capture_default_str();
  norm->add_option("--depth", na.depth, "radius ladder depth for sup seminorms")->capture_default_str();

  ApplyArgs aa;
  auto* app_apply = app.add_subcommand("apply", "coefficients of H_g(f)");
  app_apply->add_option("--g", aa.g, "symbol g")->required();
  app_apply->add_option("--f", aa.f, "input function f")->required();
  app_apply->add_option("-N", aa.N, "last output index")->capture_default_str();
  app_apply->add_option("-K", aa.K, "truncation of f")->capture_default_str();
  app_apply->add_option("--out", aa.out_path, "write the CSV here instead of stdout");

  VerdictArgs va;
  auto* app_verdict = app.add_subcommand("verdict", "theorem-indexed boundedness/compactness verdict");
  app_verdict->add_option("--g", va.g, "symbol g")->required();
  app_verdict->add_option("--from", va.from, "source space")->required();
  app_verdict->add_option("--to", va.to, "target space")->required();
  app_verdict->add_option("--budget", va.budget, "truncation=..,nmax=..,tolerance=..,depth=..");

  OpnormArgs oa;
  auto* app_opnorm = app.add_subcommand("opnorm", "truncated operator norms D2_alpha -> D2_beta");
  app_opnorm->add_option("--g", oa.g, "symbol g")->required();
  app_opnorm->add_option("--alpha", oa.alpha, "source weight")->required();
  app_opnorm->add_option("--beta", oa.beta, "target weight")->required();
  app_opnorm->add_option("--truncations", oa.truncations, "section sizes, e.g. 2^4..2^12")->capture_default_str();

  DecayArgs da;
  auto* app_decay = app.add_subcommand("decay", "finite-section tail norms");
  app_decay->add_option("--g", da.g, "symbol g")->required();
  app_decay->add_option("--alpha", da.alpha, "source weight (ignored with --wiener)");
  app_decay->add_option("--beta", da.beta, "target weight")->required();
  app_decay->add_option("--n-op", da.n_op, "section size")->capture_default_str();
  app_decay->add_option("--tails", da.tails, "tail starts T")->capture_default_str();
  app_decay->add_flag("--wiener", da.wiener, "Wiener source (exact column norms)");

  MeansArgs ma;
  auto* app_means = app.add_subcommand("means", "integral means M_p(r, f) on a radius ladder");
  app_means->add_option("--f", ma.f, "function f")->required();
  app_means->add_option("-p", ma.p, "exponent (or inf)")->capture_default_str();
  app_means->add_option("--r-depth", ma.r_depth, "ladder depth: r = 1 - 2^{-step i}")->capture_default_str();
  app_means->add_option("--step", ma.step, "ladder step")->capture_default_str();
  app_means->add_option("-N", ma.N, "truncation of f")->capture_default_str();

  VerifyArgs ya;
  auto* app_verify = app.add_subcommand("verify", "quadrature certifications");
  app_verify->require_subcommand(1);
  auto* v_l42 = app_verify->add_subcommand("lemma42", "weighted integral vs closed form");
  v_l42->add_option("--delta", ya.delta)->capture_default_str();
  v_l42->add_option("--c", ya.c)->capture_default_str();
  v_l42->add_option("--beta", ya.beta)->capture_default_str();
  v_l42->add_option("--gamma", ya.gamma)->capture_default_str();
  v_l42->add_option("--depth", ya.depth)->capture_default_str();
  v_l42->add_option("--step", ya.step)->capture_default_str();
  auto* v_mom = app_verify->add_subcommand("moment", "log-moment asymptotics");
  v_mom->add_option("--alpha", ya.alpha)->capture_default_str();
  v_mom->add_option("--nmax", ya.nmax)->capture_default_str();
  auto* v_shift = app_verify->add_subcommand("shift", "mixed-norm derivative shift");
  v_shift->add_option("--f", ya.f)->capture_default_str();
  v_shift->add_option("-p", ya.p)->capture_default_str();
  v_shift->add_option("--alpha", ya.shift_alpha)->capture_default_str();
  v_shift->add_option("--shift", ya.shift)->capture_default_str();
  v_shift->add_option("--depth", ya.depth)->capture_default_str();
  v_shift->add_option("--step", ya.step)->capture_default_str();
  v_shift->add_option("-N", ya.N)->capture_default_str();
  auto* v_r47 = app_verify->add_subcommand("remark47", "log-log blow-up trace");
  v_r47->add_option("--depth-lo", ya.depth_lo)->capture_default_str();
  v_r47->add_option("--depth-hi", ya.depth_hi)->capture_default_str();
  v_r47->add_option("--step", ya.step)->capture_default_str();

  SuiteArgs sa;
  auto* app_suite = app.add_subcommand("suite", "test suites");
  app_suite->require_subcommand(1);
  auto* s_acc = app_suite->add_subcommand("acceptance", "run the acceptance battery");
  s_acc->add_option("--artifacts", sa.artifacts, "directory for the CSV/JSON artifacts");
  s_acc->add_flag("--no-determinism", sa.no_determinism, "skip the rerun comparison");

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  Output o;
  try {
    if (*norm) do_norm(na, o);
    else if (*app_apply) do_apply(aa, o, err);
    else if (*app_verdict) do_verdict(va, o);
    else if (*app_opnorm) do_opnorm(oa, o);
    else if (*app_decay) do_decay(da, o);
    else if (*app_means) do_means(ma, o);
    else if (*v_l42) do_verify_lemma42(ya, o);
    else if (*v_mom) do_verify_moment(ya, o);
    else if (*v_shift) do_verify_shift(ya, o);
    else if (*v_r47) do_verify_remark47(ya, o);
    else if (*s_acc) do_suite(sa, o, out, json);
  } catch (const ConvergenceError& e) {
    o.doc["error"] = e.what();
    o.doc["partial"] = true;
    o.trailer.push_back(std::string("partial output: ") + e.what());
    o.emit(out, json);
    err << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const NoTheoremApplies& e) {
    err << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  o.emit(out, json);
  return o.code;
}

}  // namespace hgop::cli
