//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_MOL2_HPP
#define DOCKAUDIT_MOL2_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dockaudit/molecule.hpp"

namespace dockaudit {

/// Parses SYBYL MOL2 text. Multiple @<TRIPOS>MOLECULE records are allowed
/// and returned in file order. SYBYL atom types are mapped to elements via
/// a fixed table; unknown types raise ParseError with the line number.
/// Bond type "ar" maps to BondOrder::Aromatic, "am" to
/// BondOrder::AmideSingle. MOL2 carries partial charges only, so all formal
/// charges are zero.
std::vector<Molecule> parse_mol2(std::string_view text);

/// Writes molecules as MOL2. Output re-parses to element-wise and bond-wise
/// identical molecules with coordinates preserved within 1e-4 A.
std::string write_mol2(std::span<const Molecule> mols);

}  // namespace dockaudit

#endif  // DOCKAUDIT_MOL2_HPP
