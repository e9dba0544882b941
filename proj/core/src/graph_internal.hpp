//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_SRC_GRAPH_INTERNAL_HPP
#define DOCKAUDIT_SRC_GRAPH_INTERNAL_HPP

#include <vector>

#include "dockaudit/graph.hpp"

namespace dockaudit::detail {

void normalize_aromatic_rings(MolGraph &g);

// Equitable-refinement machinery shared by canonical labeling and
// automorphism search. Colors are rank-compressed by signature value, so
// refined colors are isomorphism-invariant.
std::vector<int> initial_colors(const MolGraph &g);
std::vector<int> refine_colors(const MolGraph &g, std::vector<int> colors);
int first_nonsingleton_cell(const std::vector<int> &colors);
std::vector<int> individualize(const std::vector<int> &colors, int v);

}  // namespace dockaudit::detail

#endif  // DOCKAUDIT_SRC_GRAPH_INTERNAL_HPP
