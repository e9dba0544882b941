//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_POSEFAM_HPP
#define DOCKAUDIT_POSEFAM_HPP

#include <vector>

#include "dockaudit/geometry.hpp"
#include "dockaudit/pose.hpp"

namespace dockaudit {

struct PoseFamily {
  ScoredPose head;                  // best-scored member
  std::vector<ScoredPose> members;  // includes the head
  int rank = 1;                     // 1-based, by head score
};

struct TopKResult {
  int k = 1;
  double best_rmsd = 0.0;
  std::vector<double> per_rank_rmsd;
  bool penalty_applied = false;
};

/// Greedy leader clustering. Poses are sorted best score first (stable on
/// input order), and each pose joins the first existing family whose head
/// is within `threshold` by symmetry-corrected RMSD, else founds a new
/// family. Families come back ranked 1..F by head score. An empty pose
/// list yields an empty family list.
std::vector<PoseFamily> cluster_poses(const std::vector<ScoredPose> &poses,
                                      double threshold,
                                      const std::vector<Permutation> &autos);

/// Flattens per-site docking runs into one pose list, provenance kept, so
/// ranking is decided by scores alone. Throws on more than `max_runs` runs
/// or on heavy-topology mismatch across runs.
std::vector<ScoredPose> merge_site_runs(
    const std::vector<std::pair<int, std::vector<ScoredPose>>> &runs,
    std::size_t max_runs = 10);

/// RMSD of the top-ranked family heads against the crystal ligand. With no
/// families at all the penalty value is applied (20.0 A by default) and
/// per_rank_rmsd stays empty. When `best_member` is set, each family
/// contributes its best member instead of its head.
TopKResult topk_accuracy(const std::vector<PoseFamily> &families,
                         const Molecule &crystal, int k,
                         const std::vector<Permutation> &autos,
                         double penalty = 20.0, bool best_member = false);

}  // namespace dockaudit

#endif  // DOCKAUDIT_POSEFAM_HPP
