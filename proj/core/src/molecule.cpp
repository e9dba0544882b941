//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/molecule.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "dockaudit/error.hpp"

namespace dockaudit {

int Molecule::heavy_atom_count() const {
  int n = 0;
  for (const Atom &a : atoms)
    n += a.is_heavy() ? 1 : 0;
  return n;
}

std::vector<int> Molecule::heavy_atom_indices() const {
  std::vector<int> idx;
  idx.reserve(atoms.size());
  for (int i = 0; i < static_cast<int>(atoms.size()); ++i) {
    if (atoms[static_cast<std::size_t>(i)].is_heavy())
      idx.push_back(i);
  }
  return idx;
}

std::vector<Eigen::Vector3d> Molecule::heavy_coordinates() const {
  std::vector<Eigen::Vector3d> pts;
  pts.reserve(atoms.size());
  for (const Atom &a : atoms) {
    if (a.is_heavy())
      pts.push_back(a.position);
  }
  return pts;
}

void Molecule::validate() const {
  const int n = static_cast<int>(atoms.size());
  for (const Atom &a : atoms) {
    if (!a.position.allFinite())
      throw Error("molecule '" + name + "': non-finite atom position");
  }
  std::set<std::pair<int, int>> seen;
  for (const Bond &b : bonds) {
    if (b.a < 0 || b.a >= n || b.b < 0 || b.b >= n)
      throw Error("molecule '" + name + "': bond index out of range");
    if (b.a == b.b)
      throw Error("molecule '" + name + "': self bond");
    auto key = std::minmax(b.a, b.b);
    if (!seen.insert(key).second)
      throw Error("molecule '" + name + "': duplicate bond");
  }
  if (heavy_atom_count() < 1)
    throw Error("molecule '" + name + "': no heavy atoms");
}

}  // namespace dockaudit
