//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_SMILES_HPP
#define DOCKAUDIT_SMILES_HPP

#include <string_view>

#include "dockaudit/graph.hpp"

namespace dockaudit {

/// Parses a SMILES string over the organic subset plus bracket atoms, ring
/// closures (two-digit via %), formal charges, and lowercase aromatic
/// notation. Implicit hydrogens follow the standard valence sets (N and P:
/// 3/5, S: 2/4/6). Stereo markers and isotopes are accepted and ignored;
/// an unspecified bond between two aromatic atoms is aromatic when it lies
/// in an aromatic ring and single otherwise (the biphenyl link).
///
/// Throws ParseError on unbalanced rings or branches, unknown elements, and
/// valence violations.
MolGraph parse_smiles(std::string_view smiles);

}  // namespace dockaudit

#endif  // DOCKAUDIT_SMILES_HPP
