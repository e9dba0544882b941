//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/posefam.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dockaudit/error.hpp"

namespace dockaudit {

namespace {

bool same_heavy_topology(const Molecule &a, const Molecule &b) {
  auto ia = a.heavy_atom_indices();
  auto ib = b.heavy_atom_indices();
  if (ia.size() != ib.size())
    return false;
  for (std::size_t k = 0; k < ia.size(); ++k) {
    if (a.atoms[static_cast<std::size_t>(ia[k])].element !=
        b.atoms[static_cast<std::size_t>(ib[k])].element)
      return false;
  }
  return true;
}

}  // namespace

std::vector<PoseFamily> cluster_poses(const std::vector<ScoredPose> &poses,
                                      double threshold,
                                      const std::vector<Permutation> &autos) {
  if (poses.empty())
    return {};
  if (threshold <= 0)
    throw Error("cluster_poses: threshold must be positive");

  const Tool tool = poses.front().tool;
  std::vector<std::size_t> order(poses.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return score_better(poses[a].score, poses[b].score, tool);
  });

  std::vector<PoseFamily> families;
  std::vector<std::vector<Eigen::Vector3d>> head_coords;
  for (std::size_t idx : order) {
    const ScoredPose &pose = poses[idx];
    std::vector<Eigen::Vector3d> coords = pose.conformation.heavy_coordinates();
    bool placed = false;
    for (std::size_t f = 0; f < families.size(); ++f) {
      double rmsd = symmetry_corrected_rmsd(
          std::span<const Eigen::Vector3d>(head_coords[f]),
          std::span<const Eigen::Vector3d>(coords), autos);
      if (rmsd <= threshold) {
        families[f].members.push_back(pose);
        placed = true;
        break;
      }
    }
    if (!placed) {
      PoseFamily fam;
      fam.head = pose;
      fam.members.push_back(pose);
      fam.rank = static_cast<int>(families.size()) + 1;
      families.push_back(std::move(fam));
      head_coords.push_back(std::move(coords));
    }
  }
  return families;
}

std::vector<ScoredPose> merge_site_runs(
    const std::vector<std::pair<int, std::vector<ScoredPose>>> &runs,
    std::size_t max_runs) {
  if (runs.size() > max_runs)
    throw Error("merge_site_runs: " + std::to_string(runs.size()) +
                " runs exceed the limit of " + std::to_string(max_runs));

  std::vector<ScoredPose> merged;
  const Molecule *reference = nullptr;
  for (const auto &[site, poses] : runs) {
    for (const ScoredPose &pose : poses) {
      if (reference == nullptr) {
        reference = &pose.conformation;
      } else if (!same_heavy_topology(*reference, pose.conformation)) {
        throw Error("merge_site_runs: topology mismatch in site " +
                    std::to_string(site));
      }
      ScoredPose copy = pose;
      copy.site_index = site;
      merged.push_back(std::move(copy));
    }
  }
  return merged;
}

TopKResult topk_accuracy(const std::vector<PoseFamily> &families,
                         const Molecule &crystal, int k,
                         const std::vector<Permutation> &autos, double penalty,
                         bool best_member) {
  if (k < 1)
    throw Error("topk_accuracy: k must be >= 1");

  TopKResult result;
  result.k = k;
  if (families.empty()) {
    result.penalty_applied = true;
    result.best_rmsd = penalty;
    return result;
  }

  const int limit = std::min<int>(k, static_cast<int>(families.size()));
  for (int r = 0; r < limit; ++r) {
    const PoseFamily &fam = families[static_cast<std::size_t>(r)];
    if (!same_heavy_topology(crystal, fam.head.conformation))
      throw Error("topk_accuracy: crystal topology mismatch");
    double value;
    if (best_member) {
      value = std::numeric_limits<double>::infinity();
      for (const ScoredPose &member : fam.members) {
        value = std::min(value, symmetry_corrected_rmsd(
                                    crystal, member.conformation, autos));
      }
    } else {
      value = symmetry_corrected_rmsd(crystal, fam.head.conformation, autos);
    }
    result.per_rank_rmsd.push_back(value);
  }
  result.best_rmsd =
      *std::min_element(result.per_rank_rmsd.begin(), result.per_rank_rmsd.end());
  return result;
}

}  // namespace dockaudit
