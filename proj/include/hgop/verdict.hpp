#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hgop {

enum class Verdict { Bounded, Compact, Unbounded, Inconclusive };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Outcome of one theorem-indexed criterion together with its numerical evidence.
/// Unset numeric fields are NaN and serialize as null.
struct VerdictReport {
  std::string theorem;    // id of the characterization used, e.g. "2.2"
  std::string criterion;  // short name of the tested quantity
  Verdict verdict = Verdict::Inconclusive;
  double slope;
  double target_slope;
  std::pair<double, double> ratio_band;
  std::size_t truncation = 0;
  double tolerance;
  std::string inequality;  // the exact inequality that was tested
  double margin;           // signed distance to the decision threshold (>= 0 means satisfied)
  std::vector<std::string> notes;

  VerdictReport();

  /// Compact implies Bounded.
  bool bounded() const { return verdict == Verdict::Bounded || verdict == Verdict::Compact; }
  bool compact() const { return verdict == Verdict::Compact; }

  nlohmann::ordered_json to_json() const;
  static VerdictReport from_json(const nlohmann::ordered_json& j);
};

}  // namespace hgop
