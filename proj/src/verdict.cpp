#include "hgop/verdict.hpp"

#include <cmath>
#include <limits>

#include "hgop/error.hpp"

namespace hgop {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

nlohmann::ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

double number(const nlohmann::ordered_json& j) { return j.is_null() ? kNaN : j.get<double>(); }

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Bounded: return "Bounded";
    case Verdict::Compact: return "Compact";
    case Verdict::Unbounded: return "Unbounded";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "Bounded") return Verdict::Bounded;
  if (s == "Compact") return Verdict::Compact;
  if (s == "Unbounded") return Verdict::Unbounded;
  if (s == "Inconclusive") return Verdict::Inconclusive;
  throw ParseError("unknown verdict '" + s + "'");
}

VerdictReport::VerdictReport()
    : slope(kNaN), target_slope(kNaN), ratio_band{kNaN, kNaN}, tolerance(kNaN), margin(kNaN) {}

nlohmann::ordered_json VerdictReport::to_json() const {
  nlohmann::ordered_json j;
  j["theorem"] = theorem;
  j["verdict"] = to_string(verdict);
  j["criterion"] = criterion;
  j["slope"] = number(slope);
  j["target_slope"] = number(target_slope);
  j["ratio_band"] = nlohmann::ordered_json::array({number(ratio_band.first), number(ratio_band.second)});
  j["truncation"] = truncation;
  j["tolerance"] = number(tolerance);
  j["inequality"] = inequality;
  j["margin"] = number(margin);
  j["notes"] = notes;
  return j;
}

VerdictReport VerdictReport::from_json(const nlohmann::ordered_json& j) {
  VerdictReport r;
  try {
    r.theorem = j.at("theorem").get<std::string>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.criterion = j.value("criterion", std::string{});
    r.slope = number(j.at("slope"));
    r.target_slope = number(j.at("target_slope"));
    const auto& band = j.at("ratio_band");
    r.ratio_band = {number(band.at(0)), number(band.at(1))};
    r.truncation = j.at("truncation").get<std::size_t>();
    r.tolerance = number(j.at("tolerance"));
    r.inequality = j.value("inequality", std::string{});
    r.margin = j.contains("margin") ? number(j.at("margin")) : kNaN;
    r.notes = j.value("notes", std::vector<std::string>{});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed verdict report: ") + e.what());
  }
  return r;
}

}  // namespace hgop
