//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/pose_io.hpp"

#include <cmath>
#include <utility>

#include "dockaudit/error.hpp"
#include "dockaudit/mol2.hpp"
#include "dockaudit/sdf.hpp"
#include "text_util.hpp"

namespace dockaudit {

namespace {

using detail::parse_double;
using detail::split_fields;
using detail::split_lines;
using detail::trim;

Element element_from_autodock_type(std::string_view type, int line_no) {
  std::string norm(trim(type));
  if (norm.empty())
    throw ParseError("PDBQT", line_no, "missing AutoDock atom type");
  // Atom-type aliases used by AutoDock force fields.
  if (norm == "A")
    norm = "C";
  else if (norm == "HD" || norm == "HS")
    norm = "H";
  else if (norm == "NA" || norm == "NS")
    norm = "N";
  else if (norm == "OA" || norm == "OS")
    norm = "O";
  else if (norm == "SA")
    norm = "S";
  if (auto e = element_from_symbol(norm); e)
    return *e;
  throw ParseError("PDBQT", line_no,
                   "unknown AutoDock atom type '" + std::string(type) + "'");
}

std::vector<ScoredPose> parse_vina_pdbqt(std::string_view text,
                                         const PoseParseOptions &opts) {
  auto lines = split_lines(text);
  std::vector<ScoredPose> poses;

  Molecule current;
  bool in_model = false;
  bool have_score = false;
  double score = 0.0;
  int model_no = 0;

  auto flush = [&](int line_no) {
    if (current.atoms.empty())
      throw ParseError("PDBQT", line_no, "MODEL block with no atoms");
    if (!have_score)
      throw ParseError("PDBQT", line_no,
                       "pose " + std::to_string(model_no) +
                           " missing REMARK VINA RESULT");
    ScoredPose pose;
    pose.conformation = std::move(current);
    pose.score = score;
    pose.tool = opts.tool == Tool::Generic ? Tool::Vina : opts.tool;
    pose.site_index = opts.site_index;
    poses.push_back(std::move(pose));
    current = Molecule{};
    have_score = false;
  };

  for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
    std::string_view line = lines[static_cast<std::size_t>(i)];
    std::string_view record = line.substr(0, std::min<std::size_t>(6, line.size()));
    if (record.substr(0, 5) == "MODEL") {
      if (in_model)
        flush(i + 1);
      in_model = true;
      ++model_no;
      current.name = "pose_" + std::to_string(model_no);
      continue;
    }
    if (record == "ENDMDL") {
      if (!in_model)
        throw ParseError("PDBQT", i + 1, "ENDMDL without MODEL");
      flush(i + 1);
      in_model = false;
      continue;
    }
    if (record == "REMARK") {
      auto fields = split_fields(line);
      // REMARK VINA RESULT: <affinity> <rmsd l.b.> <rmsd u.b.>
      if (fields.size() >= 4 && fields[1] == "VINA" && fields[2] == "RESULT:") {
        auto value = parse_double(fields[3]);
        if (!value || !std::isfinite(*value))
          throw ParseError("PDBQT", i + 1, "malformed VINA RESULT score");
        score = *value;
        have_score = true;
      }
      continue;
    }
    if (record == "ATOM  " || record == "HETATM") {
      if (!in_model) {
        // Tolerate single-pose files without MODEL framing.
        in_model = true;
        ++model_no;
        current.name = "pose_" + std::to_string(model_no);
      }
      if (line.size() < 54)
        throw ParseError("PDBQT", i + 1, "truncated coordinate record");
      auto x = parse_double(line.substr(30, 8));
      auto y = parse_double(line.substr(38, 8));
      auto z = parse_double(line.substr(46, 8));
      if (!x || !y || !z)
        throw ParseError("PDBQT", i + 1, "malformed coordinates");
      auto fields = split_fields(line);
      Atom atom;
      atom.name = std::string(trim(line.substr(12, 4)));
      atom.position = Eigen::Vector3d(*x, *y, *z);
      atom.element = element_from_autodock_type(fields.back(), i + 1);
      current.atoms.push_back(std::move(atom));
      continue;
    }
    // BRANCH/ENDBRANCH/ROOT/ENDROOT/TORSDOF and anything else: skipped.
  }
  if (in_model)
    flush(static_cast<int>(lines.size()));

  if (poses.empty())
    throw ParseError("PDBQT", 0, "zero poses");
  return poses;
}

std::vector<ScoredPose> parse_mol2_with_scores(std::string_view text,
                                               const PoseParseOptions &opts) {
  if (opts.sidecar_scores.empty())
    throw Error("MOL2 pose input requires a sidecar score table");

  std::vector<Molecule> mols = parse_mol2(text);
  if (mols.empty())
    throw ParseError("MOL2", 0, "zero poses");

  std::vector<double> scores;
  auto lines = split_lines(opts.sidecar_scores);
  for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
    std::string_view line = trim(lines[static_cast<std::size_t>(i)]);
    if (line.empty() || line.front() == '#')
      continue;
    auto fields = split_fields(line);
    auto value = parse_double(fields.back());
    if (!value || !std::isfinite(*value))
      throw ParseError("score table", i + 1, "malformed score");
    scores.push_back(*value);
  }
  if (scores.size() != mols.size())
    throw Error("score table has " + std::to_string(scores.size()) +
                " entries for " + std::to_string(mols.size()) + " poses");

  std::vector<ScoredPose> poses;
  poses.reserve(mols.size());
  for (std::size_t i = 0; i < mols.size(); ++i) {
    ScoredPose pose;
    pose.conformation = std::move(mols[i]);
    pose.score = scores[i];
    pose.tool = opts.tool;
    pose.site_index = opts.site_index;
    poses.push_back(std::move(pose));
  }
  return poses;
}

std::vector<ScoredPose> parse_sdf_with_score(std::string_view text,
                                             const PoseParseOptions &opts) {
  std::vector<Molecule> mols = parse_sdf(text);
  if (mols.empty())
    throw ParseError("SDF", 0, "zero poses");

  std::vector<ScoredPose> poses;
  poses.reserve(mols.size());
  for (std::size_t i = 0; i < mols.size(); ++i) {
    auto it = mols[i].data.find(opts.score_field);
    if (it == mols[i].data.end())
      throw Error("pose " + std::to_string(i + 1) + " missing score field '" +
                  opts.score_field + "'");
    auto value = parse_double(it->second);
    if (!value || !std::isfinite(*value))
      throw Error("pose " + std::to_string(i + 1) + " has malformed score '" +
                  it->second + "'");
    ScoredPose pose;
    pose.conformation = std::move(mols[i]);
    pose.score = *value;
    pose.tool = opts.tool;
    pose.site_index = opts.site_index;
    poses.push_back(std::move(pose));
  }
  return poses;
}

}  // namespace

bool lower_is_better(Tool tool) {
  switch (tool) {
  case Tool::Surflex:
  case Tool::DiffDock:
    return false;
  case Tool::Glide:
  case Tool::Vina:
  case Tool::Gnina:
  case Tool::Generic:
    return true;
  }
  return true;
}

std::optional<Tool> tool_from_name(std::string_view name) {
  if (name == "surflex")
    return Tool::Surflex;
  if (name == "glide")
    return Tool::Glide;
  if (name == "vina")
    return Tool::Vina;
  if (name == "gnina")
    return Tool::Gnina;
  if (name == "diffdock")
    return Tool::DiffDock;
  if (name == "generic")
    return Tool::Generic;
  return std::nullopt;
}

std::string_view tool_name(Tool tool) {
  switch (tool) {
  case Tool::Surflex: return "surflex";
  case Tool::Glide: return "glide";
  case Tool::Vina: return "vina";
  case Tool::Gnina: return "gnina";
  case Tool::DiffDock: return "diffdock";
  case Tool::Generic: return "generic";
  }
  return "generic";
}

std::vector<ScoredPose> parse_pose_output(std::string_view text,
                                          PoseFileKind kind,
                                          const PoseParseOptions &opts) {
  switch (kind) {
  case PoseFileKind::VinaPdbqt:
    return parse_vina_pdbqt(text, opts);
  case PoseFileKind::Mol2WithScores:
    return parse_mol2_with_scores(text, opts);
  case PoseFileKind::SdfWithScoreField:
    return parse_sdf_with_score(text, opts);
  }
  throw Error("unknown pose file kind");
}

}  // namespace dockaudit
