#include <iostream>

#include "battery.hpp"

int main() {
  const auto result = hgop::acceptance::run_battery(true, [](const hgop::acceptance::CriterionResult& r) {
    std::cout << hgop::acceptance::format_line(r) << std::endl;
  });
  std::size_t passed = 0;
  for (const auto& c : result.criteria) passed += c.pass ? 1 : 0;
  std::cout << passed << "/" << result.criteria.size() << " acceptance criteria passed" << std::endl;
  return result.all_passed() ? 0 : 1;
}
