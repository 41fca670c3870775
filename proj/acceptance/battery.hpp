#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hgop::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct BatteryResult {
  std::vector<CriterionResult> criteria;
  /// Named CSV/JSON outputs; byte-identical across runs (no timings inside).
  std::map<std::string, std::string> artifacts;
  bool all_passed() const;
};

/// Runs criteria 1..12; when `determinism` is set, criterion 13 reruns them and compares
/// every artifact byte for byte. `progress` (optional) is called after each criterion.
BatteryResult run_battery(bool determinism = true,
                          const std::function<void(const CriterionResult&)>& progress = {});

/// One "[PASS] ..."/"[FAIL] ..." line per criterion.
std::string format_line(const CriterionResult& r);

}  // namespace hgop::acceptance
