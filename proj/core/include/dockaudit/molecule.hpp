//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_MOLECULE_HPP
#define DOCKAUDIT_MOLECULE_HPP

#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dockaudit/element.hpp"

namespace dockaudit {

enum class BondOrder : std::uint8_t {
  Single = 1,
  Double = 2,
  Triple = 3,
  Aromatic = 4,
  // MOL2 "am". Treated as single in all graph order-class comparisons.
  AmideSingle = 5,
};

struct Atom {
  Element element = Element::C;
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  std::string name;
  int formal_charge = 0;
  // Input-annotation aromaticity (MOL2 ".ar" atom types). Bond-level
  // aromaticity lives on Bond; this survives Kekule-form bond orders.
  bool aromatic_hint = false;
  // Residue identity for polymer atoms, e.g. "ALA42". Empty for ligands
  // parsed from small-molecule formats without substructure records.
  std::string residue;
  char chain = ' ';

  bool is_heavy() const { return dockaudit::is_heavy(element); }
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
};

struct Molecule {
  std::string name;
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  // SDF-style data fields, key -> raw string value.
  std::map<std::string, std::string> data;

  int heavy_atom_count() const;
  // Indices of heavy atoms in input order; the node order of the
  // corresponding MolGraph.
  std::vector<int> heavy_atom_indices() const;
  std::vector<Eigen::Vector3d> heavy_coordinates() const;

  // Throws Error unless bond indices are in range, non-self, and unique,
  // positions are finite, and at least one heavy atom is present.
  void validate() const;
};

/// Disjoint partition of a crystallographic structure file.
struct StructureFile {
  std::vector<Molecule> proteins;  // one per chain
  std::vector<Molecule> ligands;   // one per hetero residue
  std::vector<Molecule> waters;    // one per water residue
};

}  // namespace dockaudit

#endif  // DOCKAUDIT_MOLECULE_HPP
