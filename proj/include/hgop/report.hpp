#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hgop/coefficient_sequence.hpp"

namespace hgop {

/// Full-precision (17 significant digits) decimal text of a double.
std::string fmt17(double v);

/// Simple CSV table with a header row; cells are preformatted strings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::vector<std::string> cells);
  void add_numbers(const std::vector<double>& cells);
  std::string str() const;
  nlohmann::ordered_json to_json() const;  // array of objects keyed by header

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// `n,re,im` rows for a coefficient sequence.
CsvTable coefficient_table(const CoefficientSequence& c);

}  // namespace hgop
