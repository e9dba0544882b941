//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/element.hpp"

#include <array>
#include <cctype>
#include <string>

namespace dockaudit {

namespace {

struct ElementInfo {
  std::string_view symbol;
  int atomic_number;
  ElementClass cls;
};

// Indexed by Element enumerator order.
constexpr std::array<ElementInfo, kElementCount> kElements = {{
    {"H", 1, ElementClass::Other},
    {"Li", 3, ElementClass::Metal},
    {"B", 5, ElementClass::Other},
    {"C", 6, ElementClass::CarbonSulfur},
    {"N", 7, ElementClass::Nitrogen},
    {"O", 8, ElementClass::Oxygen},
    {"F", 9, ElementClass::Halogen},
    {"Na", 11, ElementClass::Metal},
    {"Mg", 12, ElementClass::Metal},
    {"Si", 14, ElementClass::Other},
    {"P", 15, ElementClass::Phosphorus},
    {"S", 16, ElementClass::CarbonSulfur},
    {"Cl", 17, ElementClass::Halogen},
    {"K", 19, ElementClass::Metal},
    {"Ca", 20, ElementClass::Metal},
    {"Mn", 25, ElementClass::Metal},
    {"Fe", 26, ElementClass::Metal},
    {"Co", 27, ElementClass::Metal},
    {"Ni", 28, ElementClass::Metal},
    {"Cu", 29, ElementClass::Metal},
    {"Zn", 30, ElementClass::Metal},
    {"Se", 34, ElementClass::Other},
    {"Br", 35, ElementClass::Halogen},
    {"I", 53, ElementClass::Halogen},
}};

}  // namespace

std::optional<Element> element_from_symbol(std::string_view symbol) {
  if (symbol.empty() || symbol.size() > 2)
    return std::nullopt;

  std::string norm(symbol);
  norm[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(norm[0])));
  if (norm.size() == 2)
    norm[1] = static_cast<char>(std::tolower(static_cast<unsigned char>(norm[1])));

  for (int i = 0; i < kElementCount; ++i) {
    if (kElements[static_cast<std::size_t>(i)].symbol == norm)
      return static_cast<Element>(i);
  }
  return std::nullopt;
}

std::string_view element_symbol(Element e) {
  return kElements[static_cast<std::size_t>(e)].symbol;
}

int atomic_number(Element e) {
  return kElements[static_cast<std::size_t>(e)].atomic_number;
}

ElementClass element_class(Element e) {
  return kElements[static_cast<std::size_t>(e)].cls;
}

bool is_halogen(Element e) {
  return element_class(e) == ElementClass::Halogen;
}

bool is_metal(Element e) {
  return element_class(e) == ElementClass::Metal;
}

}  // namespace dockaudit
