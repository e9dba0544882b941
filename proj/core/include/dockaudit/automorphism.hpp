//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_AUTOMORPHISM_HPP
#define DOCKAUDIT_AUTOMORPHISM_HPP

#include <cstddef>
#include <vector>

#include "dockaudit/graph.hpp"

namespace dockaudit {

struct AutomorphismSet {
  std::vector<Permutation> perms;
  // True when the group is larger than the cap and `perms` is a subset.
  // RMSD minimized over a truncated set is an upper bound; reports carry
  // this flag through.
  bool truncated = false;

  std::size_t size() const { return perms.size(); }
};

/// Enumerates the automorphism group of the graph: all node bijections
/// preserving (element, charge, aromatic, H-count) labels and edge order
/// classes. The identity is always present. If the group exceeds `cap`,
/// the first `cap` permutations found are returned with `truncated` set.
AutomorphismSet automorphisms(const MolGraph &g, std::size_t cap = 100000);

}  // namespace dockaudit

#endif  // DOCKAUDIT_AUTOMORPHISM_HPP
