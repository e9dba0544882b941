//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_SVG_HPP
#define DOCKAUDIT_SVG_HPP

#include <string>
#include <vector>

#include "dockaudit/stats.hpp"

namespace dockaudit {

struct CurveSeries {
  std::string name;
  Curve curve;
};

/// Renders cumulative success curves as a standalone SVG chart with a
/// fixed 0-20 A x-axis, 0-1 y-axis, and a legend built from series names.
std::string render_curves_svg(const std::vector<CurveSeries> &series,
                              const std::string &title = "");

}  // namespace dockaudit

#endif  // DOCKAUDIT_SVG_HPP
