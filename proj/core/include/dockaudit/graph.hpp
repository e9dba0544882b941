//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_GRAPH_HPP
#define DOCKAUDIT_GRAPH_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dockaudit/element.hpp"
#include "dockaudit/molecule.hpp"

namespace dockaudit {

/// Bond order classes compared by topological identity. MOL2 "am" and SDF
/// order 1 both land on Single; MOL2 "ar", SDF order 4 and SMILES aromatic
/// notation land on Aromatic.
enum class EdgeClass : std::uint8_t {
  Single = 1,
  Double = 2,
  Triple = 3,
  Aromatic = 4,
};

struct GraphNode {
  Element element = Element::C;
  int formal_charge = 0;
  bool aromatic = false;
  int h_count = 0;

  friend bool operator==(const GraphNode &, const GraphNode &) = default;
};

struct GraphEdge {
  int a = 0;
  int b = 0;
  EdgeClass cls = EdgeClass::Single;
};

/// Heavy-atom chemical graph: simple, undirected, hydrogens folded into
/// per-node counts. Immutable once built; safe to share across threads.
class MolGraph {
public:
  int add_node(GraphNode node);
  void add_edge(int a, int b, EdgeClass cls);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const GraphNode &node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  GraphNode &node(int i) { return nodes_[static_cast<std::size_t>(i)]; }
  const std::vector<GraphEdge> &edges() const { return edges_; }
  GraphEdge &edge(int i) { return edges_[static_cast<std::size_t>(i)]; }

  // (neighbor, edge index) pairs in insertion order.
  const std::vector<std::pair<int, int>> &neighbors(int i) const {
    return adj_[static_cast<std::size_t>(i)];
  }
  int degree(int i) const { return static_cast<int>(adj_[static_cast<std::size_t>(i)].size()); }

  std::optional<EdgeClass> edge_class(int a, int b) const;

private:
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// A node bijection preserving labels and edge classes.
struct Permutation {
  std::vector<int> mapping;  // mapping[i] = image of node i

  int size() const { return static_cast<int>(mapping.size()); }
  int operator[](int i) const { return mapping[static_cast<std::size_t>(i)]; }
};

/// Builds the heavy-atom graph of a molecule. Node order is the order of
/// heavy atoms in the input; hydrogens become per-node counts. Bonds inside
/// rings whose atoms are all flagged aromatic are normalized to
/// EdgeClass::Aromatic, so Kekule-form and aromatic-form inputs of the same
/// ring system compare identical.
MolGraph from_molecule(const Molecule &mol);

/// Canonical node ranks: relabeling the input leaves the canonical form
/// unchanged. Morgan-style refinement of (element, charge, aromatic,
/// H-count, degree) seeds with systematic individualization on ties.
std::vector<int> canonical_labels(const MolGraph &g);

/// Serialized canonical form; equal strings iff graphs are identical.
std::string canonical_form(const MolGraph &g);

/// True iff the two graphs match on elements, charges, aromatic classes,
/// bond order classes, and hydrogen counts under some isomorphism.
bool graphs_identical(const MolGraph &a, const MolGraph &b);

/// Topology check of a parsed ligand against its curated SMILES, the
/// clean-set membership test.
bool verify_ligand(const Molecule &candidate, std::string_view curated_smiles);

}  // namespace dockaudit

#endif  // DOCKAUDIT_GRAPH_HPP
