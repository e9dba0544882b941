//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_POSE_HPP
#define DOCKAUDIT_POSE_HPP

#include <optional>
#include <string_view>

#include "dockaudit/molecule.hpp"

namespace dockaudit {

/// Pose provenance. The score sign convention is a fixed property of the
/// tool and is never inferred from the data.
enum class Tool : std::uint8_t {
  Surflex,   // higher is better
  Glide,     // lower is better (docking score)
  Vina,      // lower is better (binding energy)
  Gnina,     // lower is better (minimized affinity)
  DiffDock,  // higher is better (confidence)
  Generic,   // lower is better (energy convention)
};

bool lower_is_better(Tool tool);

/// True when `a` is a strictly better score than `b` under the tool's
/// convention.
inline bool score_better(double a, double b, Tool tool) {
  return lower_is_better(tool) ? a < b : a > b;
}

std::optional<Tool> tool_from_name(std::string_view name);
std::string_view tool_name(Tool tool);

struct ScoredPose {
  Molecule conformation;
  double score = 0.0;
  Tool tool = Tool::Generic;
  int site_index = 0;
};

}  // namespace dockaudit

#endif  // DOCKAUDIT_POSE_HPP
