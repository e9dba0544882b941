//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_SDF_HPP
#define DOCKAUDIT_SDF_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dockaudit/molecule.hpp"

namespace dockaudit {

/// Parses SDF with V2000 connection tables, multiple records in file order.
/// Bond order 4 maps to BondOrder::Aromatic. Formal charges come from
/// "M  CHG" lines (which supersede the legacy per-atom charge column).
/// Data fields are retained on Molecule::data. V3000 input is rejected.
std::vector<Molecule> parse_sdf(std::string_view text);

/// Writes V2000 SDF. Aromatic bonds are written as order 4; amide-class
/// bonds as order 1. Data fields and formal charges round-trip.
std::string write_sdf(std::span<const Molecule> mols);

}  // namespace dockaudit

#endif  // DOCKAUDIT_SDF_HPP
