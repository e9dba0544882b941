//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/fingerprint.hpp"

#include <algorithm>
#include <bit>

namespace dockaudit {

int Fingerprint::count() const {
  int n = 0;
  for (std::uint64_t w : words)
    n += std::popcount(w);
  return n;
}

bool Fingerprint::empty() const {
  for (std::uint64_t w : words) {
    if (w != 0)
      return false;
  }
  return true;
}

std::uint64_t fp_mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fp_combine(std::uint64_t h, std::uint64_t x) {
  return fp_mix(h ^ fp_mix(x + 0x9e3779b97f4a7c15ULL));
}

std::vector<std::uint64_t> atom_environment_ids(const MolGraph &g, int radius) {
  const int n = g.node_count();
  std::vector<std::uint64_t> ids(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const GraphNode &node = g.node(v);
    std::uint64_t h = 0x5d0f;
    h = fp_combine(h, static_cast<std::uint64_t>(atomic_number(node.element)));
    h = fp_combine(h, static_cast<std::uint64_t>(node.formal_charge + 16));
    h = fp_combine(h, static_cast<std::uint64_t>(node.h_count));
    h = fp_combine(h, static_cast<std::uint64_t>(g.degree(v)));
    h = fp_combine(h, node.aromatic ? 1 : 0);
    ids[static_cast<std::size_t>(v)] = h;
  }

  for (int r = 1; r <= radius; ++r) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<std::uint64_t> tokens;
      tokens.reserve(g.neighbors(v).size());
      for (auto [u, eidx] : g.neighbors(v)) {
        std::uint64_t cls =
            static_cast<std::uint64_t>(g.edges()[static_cast<std::size_t>(eidx)].cls);
        tokens.push_back(fp_combine(cls, ids[static_cast<std::size_t>(u)]));
      }
      std::sort(tokens.begin(), tokens.end());
      std::uint64_t h = ids[static_cast<std::size_t>(v)];
      for (std::uint64_t t : tokens)
        h = fp_combine(h, t);
      next[static_cast<std::size_t>(v)] = h;
    }
    ids = std::move(next);
  }
  return ids;
}

Fingerprint fingerprint(const MolGraph &g) {
  Fingerprint fp;
  std::vector<std::uint64_t> ids = atom_environment_ids(g, 0);
  for (int r = 0; r <= Fingerprint::kRadius; ++r) {
    if (r > 0)
      ids = atom_environment_ids(g, r);
    for (std::uint64_t id : ids)
      fp.set(static_cast<std::uint32_t>(id % Fingerprint::kBits));
  }
  return fp;
}

double tanimoto(const Fingerprint &a, const Fingerprint &b) {
  int both = 0, any = 0;
  for (int i = 0; i < Fingerprint::kWords; ++i) {
    both += std::popcount(a.words[static_cast<std::size_t>(i)] &
                          b.words[static_cast<std::size_t>(i)]);
    any += std::popcount(a.words[static_cast<std::size_t>(i)] |
                         b.words[static_cast<std::size_t>(i)]);
  }
  if (any == 0)
    return 1.0;
  return static_cast<double>(both) / static_cast<double>(any);
}

}  // namespace dockaudit
