//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_PDB_HPP
#define DOCKAUDIT_PDB_HPP

#include <string_view>

#include "dockaudit/molecule.hpp"

namespace dockaudit {

/// Splits PDB-format text into proteins (one Molecule per chain), ligands
/// (one per HETATM residue group), and waters (HOH/WAT residues).
///
/// Rules:
///  - only the first MODEL of a multi-model file is read;
///  - alternate locations keep the highest-occupancy copy, ties broken by
///    file order;
///  - ATOM records stay with their chain's polymer, including non-standard
///    residue names;
///  - no bonds are perceived; molecules carry coordinates and residue
///    labels only.
///
/// Throws ParseError when the text contains no ATOM records at all.
StructureFile split_structure(std::string_view text);

}  // namespace dockaudit

#endif  // DOCKAUDIT_PDB_HPP
