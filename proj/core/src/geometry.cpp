//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/geometry.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "dockaudit/error.hpp"

namespace dockaudit {

KabschResult kabsch(std::span<const Eigen::Vector3d> fixed,
                    std::span<const Eigen::Vector3d> moving) {
  if (fixed.size() != moving.size())
    throw Error("kabsch: point count mismatch");
  const std::size_t n = fixed.size();
  if (n < 3)
    throw Error("kabsch: need at least 3 points");

  Eigen::Vector3d cf = Eigen::Vector3d::Zero();
  Eigen::Vector3d cm = Eigen::Vector3d::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    cf += fixed[i];
    cm += moving[i];
  }
  cf /= static_cast<double>(n);
  cm /= static_cast<double>(n);

  Eigen::Matrix3d cross = Eigen::Matrix3d::Zero();
  for (std::size_t i = 0; i < n; ++i)
    cross += (moving[i] - cm) * (fixed[i] - cf).transpose();

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(cross,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d sv = svd.singularValues();
  // Collinear or coincident point sets leave the rotation about the
  // degenerate axis undetermined.
  if (sv(1) <= 1e-9 * std::max(1.0, sv(0)))
    throw Error("kabsch: degenerate point configuration");

  Eigen::Matrix3d u = svd.matrixU();
  Eigen::Matrix3d v = svd.matrixV();
  Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
  d(2, 2) = (v * u.transpose()).determinant() < 0 ? -1.0 : 1.0;

  RigidTransform t;
  t.rotation = v * d * u.transpose();
  t.translation = cf - t.rotation * cm;

  double se = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    se += (t.apply(moving[i]) - fixed[i]).squaredNorm();

  return {t, std::sqrt(se / static_cast<double>(n))};
}

double symmetry_corrected_rmsd(std::span<const Eigen::Vector3d> reference,
                               std::span<const Eigen::Vector3d> pose,
                               const std::vector<Permutation> &autos) {
  if (reference.size() != pose.size())
    throw Error("symmetry_corrected_rmsd: size mismatch");
  if (reference.empty())
    throw Error("symmetry_corrected_rmsd: empty structures");
  if (autos.empty())
    throw Error("symmetry_corrected_rmsd: empty automorphism list");

  const int n = static_cast<int>(reference.size());
  double best = std::numeric_limits<double>::infinity();
  for (const Permutation &perm : autos) {
    if (perm.size() != n)
      throw Error("symmetry_corrected_rmsd: permutation size mismatch");
    double se = 0.0;
    for (int i = 0; i < n; ++i)
      se += (reference[static_cast<std::size_t>(i)] -
             pose[static_cast<std::size_t>(perm[i])])
                .squaredNorm();
    best = std::min(best, se);
  }
  return std::sqrt(best / n);
}

double symmetry_corrected_rmsd(const Molecule &reference, const Molecule &pose,
                               const std::vector<Permutation> &autos) {
  std::vector<Eigen::Vector3d> ref = reference.heavy_coordinates();
  std::vector<Eigen::Vector3d> mov = pose.heavy_coordinates();
  if (ref.size() != mov.size())
    throw Error("symmetry_corrected_rmsd: heavy-atom count mismatch between '" +
                reference.name + "' and '" + pose.name + "'");
  return symmetry_corrected_rmsd(std::span<const Eigen::Vector3d>(ref),
                                 std::span<const Eigen::Vector3d>(mov), autos);
}

}  // namespace dockaudit
