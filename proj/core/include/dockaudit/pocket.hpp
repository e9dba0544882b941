//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_POCKET_HPP
#define DOCKAUDIT_POCKET_HPP

#include <string>
#include <vector>

#include <Eigen/Core>

#include "dockaudit/geometry.hpp"
#include "dockaudit/molecule.hpp"

namespace dockaudit {

struct PocketAtom {
  Element element = Element::C;
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  std::string residue;
  char chain = ' ';
};

/// Protein heavy atoms within a cutoff of the reference ligand.
struct Pocket {
  std::vector<PocketAtom> atoms;
  Molecule reference_ligand;
  std::string source_id;

  std::size_t size() const { return atoms.size(); }
};

/// Axis-aligned docking box; extents are full edge lengths.
struct Box3D {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  Eigen::Vector3d extents = Eigen::Vector3d::Zero();
};

/// All protein heavy atoms within `cutoff` of any ligand heavy atom.
/// Throws Error when the pocket comes out empty (ligand nowhere near the
/// protein).
Pocket extract_pocket(const Molecule &protein, const Molecule &ligand,
                      double cutoff = 5.0);

/// Bounds of the ligand's heavy atoms inflated by `padding` on each side,
/// each extent raised to `min_size` with the center kept fixed.
Box3D ligand_box(const Molecule &ligand, double padding = 2.0,
                 double min_size = 10.0);

/// Vina config text: center_x/center_y/center_z/size_x/size_y/size_z.
std::string box_to_vina_config(const Box3D &box);

/// Pocket-similarity score in [0, 1]:
///  1. candidate superpositions of b onto a from principal-axes alignment
///     (4 proper sign combinations), plus a Kabsch seed from reference
///     ligand atoms matched by radius-2 environment hash when >= 3 match;
///  2. each seed refined by up to 50 ICP rounds on pocket heavy atoms
///     (match cutoff 3.0 A, same element class only);
///  3. score = sum over matched atoms of exp(-d^2/2) * w / max(|a|, |b|)
///     with w = 1 for the same element class, 0.3 otherwise;
///  4. the best seed wins.
/// Throws Error on pockets with fewer than 3 atoms.
double pocket_similarity(const Pocket &a, const Pocket &b);

}  // namespace dockaudit

#endif  // DOCKAUDIT_POCKET_HPP
