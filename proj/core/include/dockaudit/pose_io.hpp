//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_POSE_IO_HPP
#define DOCKAUDIT_POSE_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dockaudit/pose.hpp"

namespace dockaudit {

enum class PoseFileKind : std::uint8_t {
  VinaPdbqt,           // MODEL blocks; score from "REMARK VINA RESULT"
  Mol2WithScores,      // multi-record MOL2; scores from a sidecar table
  SdfWithScoreField,   // score from a named SDF data field
};

struct PoseParseOptions {
  Tool tool = Tool::Generic;
  // SDF data field holding the docking score.
  std::string score_field = "score";
  // Sidecar score table for Mol2WithScores: one pose per non-comment line,
  // score in the last whitespace-separated field, matched to MOL2 records
  // by order.
  std::string_view sidecar_scores{};
  int site_index = 0;
};

/// Parses a docking tool's pose output. Poses are returned in file order
/// with finite scores; a pose without a score or a file with zero poses is
/// an error. PDBQT poses carry coordinates only (no bonds); torsion-tree
/// records are skipped.
std::vector<ScoredPose> parse_pose_output(std::string_view text,
                                          PoseFileKind kind,
                                          const PoseParseOptions &opts = {});

}  // namespace dockaudit

#endif  // DOCKAUDIT_POSE_IO_HPP
