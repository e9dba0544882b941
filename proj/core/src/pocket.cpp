//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/pocket.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include <Eigen/Dense>

#include "dockaudit/error.hpp"
#include "dockaudit/fingerprint.hpp"
#include "dockaudit/graph.hpp"

namespace dockaudit {

namespace {

constexpr double kIcpCutoff = 3.0;       // A
constexpr double kScoreSigma = 1.0;      // A
constexpr double kCrossClassWeight = 0.3;
constexpr int kIcpRounds = 50;

struct Cloud {
  std::vector<Eigen::Vector3d> pts;
  std::vector<ElementClass> cls;
};

Cloud make_cloud(const Pocket &p) {
  Cloud c;
  c.pts.reserve(p.atoms.size());
  c.cls.reserve(p.atoms.size());
  for (const PocketAtom &a : p.atoms) {
    c.pts.push_back(a.position);
    c.cls.push_back(element_class(a.element));
  }
  return c;
}

Eigen::Vector3d centroid(const std::vector<Eigen::Vector3d> &pts) {
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (const auto &p : pts)
    c += p;
  return c / static_cast<double>(pts.size());
}

// Right-handed principal axes, columns ordered by decreasing spread.
Eigen::Matrix3d principal_axes(const std::vector<Eigen::Vector3d> &pts) {
  Eigen::Vector3d c = centroid(pts);
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const auto &p : pts) {
    Eigen::Vector3d d = p - c;
    cov += d * d.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(cov);
  Eigen::Matrix3d axes;
  // SelfAdjointEigenSolver sorts eigenvalues ascending.
  axes.col(0) = solver.eigenvectors().col(2);
  axes.col(1) = solver.eigenvectors().col(1);
  axes.col(2) = solver.eigenvectors().col(0);
  if (axes.determinant() < 0)
    axes.col(2) = -axes.col(2);
  return axes;
}

// Nearest atom of `cloud` to `p`, optionally restricted to one element
// class. Returns -1 when nothing lies within the cutoff.
int nearest(const Cloud &cloud, const Eigen::Vector3d &p, double cutoff,
            std::optional<ElementClass> want) {
  int best = -1;
  double best_d2 = cutoff * cutoff;
  for (int i = 0; i < static_cast<int>(cloud.pts.size()); ++i) {
    if (want && cloud.cls[static_cast<std::size_t>(i)] != *want)
      continue;
    double d2 = (cloud.pts[static_cast<std::size_t>(i)] - p).squaredNorm();
    if (d2 <= best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  return best;
}

double score_superposition(const Cloud &a, const Cloud &b,
                           const RigidTransform &t) {
  double total = 0.0;
  for (std::size_t i = 0; i < b.pts.size(); ++i) {
    Eigen::Vector3d p = t.apply(b.pts[i]);
    int j = nearest(a, p, kIcpCutoff, std::nullopt);
    if (j < 0)
      continue;
    double d2 = (a.pts[static_cast<std::size_t>(j)] - p).squaredNorm();
    double w = a.cls[static_cast<std::size_t>(j)] == b.cls[i]
                   ? 1.0
                   : kCrossClassWeight;
    total += w * std::exp(-d2 / (2.0 * kScoreSigma * kScoreSigma));
  }
  double denom = static_cast<double>(std::max(a.pts.size(), b.pts.size()));
  return std::clamp(total / denom, 0.0, 1.0);
}

RigidTransform refine_icp(const Cloud &a, const Cloud &b, RigidTransform t) {
  double prev = -1.0;
  for (int round = 0; round < kIcpRounds; ++round) {
    std::vector<Eigen::Vector3d> fixed, moving;
    for (std::size_t i = 0; i < b.pts.size(); ++i) {
      Eigen::Vector3d p = t.apply(b.pts[i]);
      int j = nearest(a, p, kIcpCutoff, b.cls[i]);
      if (j < 0)
        continue;
      fixed.push_back(a.pts[static_cast<std::size_t>(j)]);
      moving.push_back(b.pts[i]);
    }
    if (fixed.size() < 3)
      break;
    RigidTransform next;
    try {
      next = kabsch(fixed, moving).transform;
    } catch (const Error &) {
      break;  // matched subset degenerate; keep the current transform
    }
    double score = score_superposition(a, b, next);
    t = next;
    if (std::abs(score - prev) < 1e-7)
      break;
    prev = score;
  }
  return t;
}

// Reference-ligand atoms matched by radius-2 environment hash, used to
// seed the superposition when the two ligands share a substructure.
std::vector<std::pair<int, int>> ligand_atom_matches(const Molecule &la,
                                                     const Molecule &lb) {
  MolGraph ga = from_molecule(la);
  MolGraph gb = from_molecule(lb);
  auto ids_a = atom_environment_ids(ga, 2);
  auto ids_b = atom_environment_ids(gb, 2);

  std::map<std::uint64_t, std::pair<std::vector<int>, std::vector<int>>> buckets;
  for (int i = 0; i < static_cast<int>(ids_a.size()); ++i)
    buckets[ids_a[static_cast<std::size_t>(i)]].first.push_back(i);
  for (int i = 0; i < static_cast<int>(ids_b.size()); ++i)
    buckets[ids_b[static_cast<std::size_t>(i)]].second.push_back(i);

  std::vector<std::pair<int, int>> matches;
  for (const auto &[id, pair] : buckets) {
    std::size_t n = std::min(pair.first.size(), pair.second.size());
    for (std::size_t k = 0; k < n; ++k)
      matches.emplace_back(pair.first[k], pair.second[k]);
  }
  return matches;
}

}  // namespace

Pocket extract_pocket(const Molecule &protein, const Molecule &ligand,
                      double cutoff) {
  if (cutoff <= 0)
    throw Error("extract_pocket: cutoff must be positive");

  std::vector<Eigen::Vector3d> lig_pts = ligand.heavy_coordinates();
  if (lig_pts.empty())
    throw Error("extract_pocket: ligand has no heavy atoms");

  Pocket pocket;
  pocket.reference_ligand = ligand;
  const double cutoff2 = cutoff * cutoff;
  for (const Atom &atom : protein.atoms) {
    if (!atom.is_heavy())
      continue;
    for (const Eigen::Vector3d &lp : lig_pts) {
      if ((atom.position - lp).squaredNorm() <= cutoff2) {
        pocket.atoms.push_back(
            {atom.element, atom.position, atom.residue, atom.chain});
        break;
      }
    }
  }
  if (pocket.atoms.empty())
    throw Error("extract_pocket: empty pocket (ligand not near protein)");
  return pocket;
}

Box3D ligand_box(const Molecule &ligand, double padding, double min_size) {
  if (padding < 0 || min_size <= 0)
    throw Error("ligand_box: invalid padding/min_size");
  std::vector<Eigen::Vector3d> pts = ligand.heavy_coordinates();
  if (pts.empty())
    throw Error("ligand_box: ligand has no heavy atoms");

  Eigen::Vector3d lo = pts.front(), hi = pts.front();
  for (const Eigen::Vector3d &p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  Box3D box;
  box.center = (lo + hi) / 2.0;
  box.extents = (hi - lo) + Eigen::Vector3d::Constant(2.0 * padding);
  box.extents = box.extents.cwiseMax(min_size);
  return box;
}

std::string box_to_vina_config(const Box3D &box) {
  char buf[64];
  std::string out;
  const char *keys[3] = {"center_x", "center_y", "center_z"};
  const char *sizes[3] = {"size_x", "size_y", "size_z"};
  for (int i = 0; i < 3; ++i) {
    std::snprintf(buf, sizeof buf, "%s = %.3f\n", keys[i], box.center(i));
    out += buf;
  }
  for (int i = 0; i < 3; ++i) {
    std::snprintf(buf, sizeof buf, "%s = %.3f\n", sizes[i], box.extents(i));
    out += buf;
  }
  return out;
}

double pocket_similarity(const Pocket &a, const Pocket &b) {
  if (a.size() < 3 || b.size() < 3)
    throw Error("pocket_similarity: degenerate pocket (< 3 atoms)");

  Cloud ca = make_cloud(a);
  Cloud cb = make_cloud(b);

  std::vector<RigidTransform> seeds;

  // Principal-axes seeds over the 4 proper sign combinations.
  Eigen::Matrix3d axes_a = principal_axes(ca.pts);
  Eigen::Matrix3d axes_b = principal_axes(cb.pts);
  Eigen::Vector3d cen_a = centroid(ca.pts);
  Eigen::Vector3d cen_b = centroid(cb.pts);
  constexpr int kSigns[4][3] = {
      {1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (const auto &s : kSigns) {
    Eigen::Matrix3d flip = Eigen::Vector3d(s[0], s[1], s[2]).asDiagonal();
    RigidTransform t;
    t.rotation = axes_a * flip * axes_b.transpose();
    t.translation = cen_a - t.rotation * cen_b;
    seeds.push_back(t);
  }

  // Ligand-derived Kabsch seed when the reference ligands share a
  // substructure of at least 3 hash-matched atoms.
  if (a.reference_ligand.heavy_atom_count() >= 1 &&
      b.reference_ligand.heavy_atom_count() >= 1) {
    try {
      auto matches = ligand_atom_matches(a.reference_ligand, b.reference_ligand);
      if (matches.size() >= 3) {
        std::vector<Eigen::Vector3d> pa = a.reference_ligand.heavy_coordinates();
        std::vector<Eigen::Vector3d> pb = b.reference_ligand.heavy_coordinates();
        std::vector<Eigen::Vector3d> fixed, moving;
        for (auto [i, j] : matches) {
          fixed.push_back(pa[static_cast<std::size_t>(i)]);
          moving.push_back(pb[static_cast<std::size_t>(j)]);
        }
        seeds.push_back(kabsch(fixed, moving).transform);
      }
    } catch (const Error &) {
      // degenerate or unparsable ligand seed; axis seeds remain
    }
  }

  double best = 0.0;
  for (const RigidTransform &seed : seeds) {
    RigidTransform refined = refine_icp(ca, cb, seed);
    best = std::max(best, score_superposition(ca, cb, refined));
  }
  return best;
}

}  // namespace dockaudit
