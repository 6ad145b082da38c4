#include "argeq/fixtures.hpp"

#include <stdexcept>

namespace argeq::fixtures {

Framework fig6() {
  return Framework::from_names({"X", "Y", "W", "Z"}, {{"X", "Y"}, {"Y", "W"}, {"W", "Z"}, {"Z", "W"}});
}

Valuation fig6_case(int which) {
  const Framework fw = fig6();
  switch (which) {
    case 1: return Valuation::of(fw, {{"X", 0}, {"Y", 0}, {"W", 0}, {"Z", 1}});
    case 2: return Valuation::of(fw, {{"X", 0}, {"Y", 1}, {"W", 1}, {"Z", 0}});
    case 3: return Valuation::of(fw, {{"X", 1}, {"Y", 0}, {"W", 1}, {"Z", 0}});
    default: throw std::out_of_range("fig6 has cases 1..3");
  }
}

Framework fig9_left() {
  return Framework::from_names({"X", "Y", "A", "B", "C", "Z"},
                               {{"A", "B"}, {"B", "C"}, {"C", "A"}, {"B", "X"}, {"X", "Y"}, {"Y", "X"}});
}

Framework fig9_right() {
  return Framework::from_names({"X", "Y", "A", "B", "C", "Z"},
                               {{"X", "Y"}, {"Y", "X"}, {"X", "B"}, {"A", "B"}, {"B", "C"}, {"C", "A"}});
}

std::vector<NamedSeed> fig9_cases() {
  const Framework left = fig9_left();
  const Framework right = fig9_right();
  return {
      {"L1", left, Valuation::of(left, {{"X", 0}, {"Y", 1}, {"A", 0}, {"B", 1}, {"C", 0}, {"Z", 0}})},
      {"L2", left, Valuation::of(left, {{"X", 1}, {"Y", 0}, {"A", 1}, {"B", 0}, {"C", 0}, {"Z", 0.5}})},
      {"R1", right, Valuation::of(right, {{"X", 1}, {"Y", 0}, {"A", 1}, {"B", 1}, {"C", 0}, {"Z", 0}})},
      {"R2", right, Valuation::of(right, {{"X", 0}, {"Y", 1}, {"A", 0}, {"B", 0}, {"C", 1}, {"Z", 0.5}})},
  };
}

Framework two_cycle() { return Framework::from_names({"X", "Y"}, {{"X", "Y"}, {"Y", "X"}}); }

Framework three_cycle() {
  return Framework::from_names({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"C", "A"}});
}

Framework min_product_example() {
  return Framework::from_names({"X", "Y", "W", "Z"},
                               {{"X", "Y"}, {"Y", "X"}, {"Z", "W"}, {"W", "Z"}, {"Z", "Z"}});
}

Framework self_loop() { return Framework::from_names({"X"}, {{"X", "X"}}); }

Framework npq() {
  return Framework::from_names({"N", "P", "Q"}, {{"P", "N"}, {"Q", "N"}, {"N", "P"}, {"P", "Q"}, {"N", "Q"}});
}

Framework chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Attack> attacks;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("X" + std::to_string(i + 1));
    if (i > 0) attacks.emplace_back(i - 1, i);
  }
  return Framework(std::move(names), std::move(attacks));
}

Framework adf_framework() {
  return Framework::from_names({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "c"}});
}

std::vector<AcceptanceCondition> adf_conditions() {
  using C = AcceptanceCondition;
  return {C::truth(), C::variable(0), C::conjunction(C::variable(2), C::variable(1)), C::negation(C::variable(3))};
}

}  // namespace argeq::fixtures
