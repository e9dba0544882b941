//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_ELEMENT_HPP
#define DOCKAUDIT_ELEMENT_HPP

#include <cstdint>
#include <optional>
#include <string_view>

namespace dockaudit {

/// The fixed periodic-table subset recognized by the parsers: the organic
/// elements, the halogens, and the metals that commonly appear in binding
/// sites. Anything else is a hard parse error, never a guess.
enum class Element : std::uint8_t {
  H,
  Li,
  B,
  C,
  N,
  O,
  F,
  Na,
  Mg,
  Si,
  P,
  S,
  Cl,
  K,
  Ca,
  Mn,
  Fe,
  Co,
  Ni,
  Cu,
  Zn,
  Se,
  Br,
  I,
};

inline constexpr int kElementCount = 24;

/// Coarse element classes used by pocket-similarity matching. Preparation
/// pipelines disagree on fine typing, so pockets are compared at this
/// granularity.
enum class ElementClass : std::uint8_t {
  CarbonSulfur,
  Nitrogen,
  Oxygen,
  Phosphorus,
  Halogen,
  Metal,
  Other,
};

std::optional<Element> element_from_symbol(std::string_view symbol);
std::string_view element_symbol(Element e);
int atomic_number(Element e);
ElementClass element_class(Element e);
bool is_halogen(Element e);
bool is_metal(Element e);

inline bool is_heavy(Element e) { return e != Element::H; }

}  // namespace dockaudit

#endif  // DOCKAUDIT_ELEMENT_HPP
