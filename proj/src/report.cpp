#include "hgop/report.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hgop/error.hpp"

namespace hgop {

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw DomainError("CSV row width does not match the header");
  rows_.push_back(std::move(cells));
}

void CsvTable::add_numbers(const std::vector<double>& cells) {
  std::vector<std::string> s;
  s.reserve(cells.size());
  for (double v : cells) s.push_back(fmt17(v));
  add_row(std::move(s));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

nlohmann::ordered_json CsvTable::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows_) {
    nlohmann::ordered_json o;
    for (std::size_t i = 0; i < header_.size(); ++i) o[header_[i]] = r[i];
    arr.push_back(std::move(o));
  }
  return arr;
}

CsvTable coefficient_table(const CoefficientSequence& c) {
  CsvTable t({"n", "re", "im"});
  for (std::size_t n = 0; n < c.size(); ++n) t.add_row({std::to_string(n), fmt17(c[n].real()), fmt17(c[n].imag())});
  return t;
}

}  // namespace hgop
