//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_GEOMETRY_HPP
#define DOCKAUDIT_GEOMETRY_HPP

#include <span>
#include <vector>

#include <Eigen/Core>

#include "dockaudit/automorphism.hpp"
#include "dockaudit/molecule.hpp"

namespace dockaudit {

struct RigidTransform {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Eigen::Vector3d apply(const Eigen::Vector3d &p) const {
    return rotation * p + translation;
  }
  RigidTransform then(const RigidTransform &outer) const {
    return {outer.rotation * rotation,
            outer.rotation * translation + outer.translation};
  }
};

struct KabschResult {
  RigidTransform transform;  // maps `moving` onto `fixed`
  double rmsd = 0.0;         // post-alignment
};

/// Least-squares optimal proper rotation + translation (no reflection).
/// Throws Error on length mismatch, fewer than 3 points, or a degenerate
/// (collinear) configuration.
KabschResult kabsch(std::span<const Eigen::Vector3d> fixed,
                    std::span<const Eigen::Vector3d> moving);

/// Minimum over the given automorphisms of the fixed-frame heavy-atom RMSD
///   sqrt(mean_i |ref[i] - pose[perm(i)]|^2).
/// No re-superposition: both structures must already live in the same
/// crystallographic frame. Throws Error on size mismatch or an empty
/// permutation list.
double symmetry_corrected_rmsd(std::span<const Eigen::Vector3d> reference,
                               std::span<const Eigen::Vector3d> pose,
                               const std::vector<Permutation> &autos);

/// Heavy-atom overload; reference and pose must present heavy atoms in the
/// same (shared-graph) order.
double symmetry_corrected_rmsd(const Molecule &reference, const Molecule &pose,
                               const std::vector<Permutation> &autos);

}  // namespace dockaudit

#endif  // DOCKAUDIT_GEOMETRY_HPP
