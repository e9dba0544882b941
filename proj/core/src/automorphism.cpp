//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/automorphism.hpp"

#include <algorithm>

#include "graph_internal.hpp"

namespace dockaudit {

namespace {

// Dense edge-class matrix; 0 means no edge. Molecule-sized graphs keep
// this small.
struct EdgeMatrix {
  int n;
  std::vector<std::uint8_t> m;

  explicit EdgeMatrix(const MolGraph &g) : n(g.node_count()), m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    for (const GraphEdge &e : g.edges()) {
      m[static_cast<std::size_t>(e.a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.b)] =
          static_cast<std::uint8_t>(e.cls);
      m[static_cast<std::size_t>(e.b) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.a)] =
          static_cast<std::uint8_t>(e.cls);
    }
  }

  std::uint8_t at(int a, int b) const {
    return m[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)];
  }
};

struct Search {
  const MolGraph &g;
  const EdgeMatrix edges;
  const std::vector<int> colors;
  std::vector<int> order;    // source nodes, grouped by color
  std::vector<int> image;    // partial mapping, -1 = unassigned
  std::vector<char> used;    // target occupancy
  std::vector<Permutation> found;
  std::size_t cap;
  bool truncated = false;

  Search(const MolGraph &graph, std::size_t cap_limit)
      : g(graph), edges(graph),
        colors(detail::refine_colors(graph, detail::initial_colors(graph))),
        cap(cap_limit) {
    const int n = g.node_count();
    order.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (colors[static_cast<std::size_t>(a)] != colors[static_cast<std::size_t>(b)])
        return colors[static_cast<std::size_t>(a)] < colors[static_cast<std::size_t>(b)];
      return a < b;
    });
    image.assign(static_cast<std::size_t>(n), -1);
    used.assign(static_cast<std::size_t>(n), 0);
  }

  bool consistent(int v, int u) const {
    // Refined colors are automorphism-invariant, so v can only map to a
    // node of the same color.
    if (colors[static_cast<std::size_t>(v)] != colors[static_cast<std::size_t>(u)])
      return false;
    for (int w = 0; w < g.node_count(); ++w) {
      int iw = image[static_cast<std::size_t>(w)];
      if (iw < 0)
        continue;
      if (edges.at(v, w) != edges.at(u, iw))
        return false;
    }
    return true;
  }

  void dfs(std::size_t depth) {
    if (found.size() >= cap) {
      truncated = true;
      return;
    }
    if (depth == order.size()) {
      Permutation p;
      p.mapping = image;
      found.push_back(std::move(p));
      return;
    }
    int v = order[depth];
    for (int u = 0; u < g.node_count(); ++u) {
      if (used[static_cast<std::size_t>(u)] || !consistent(v, u))
        continue;
      image[static_cast<std::size_t>(v)] = u;
      used[static_cast<std::size_t>(u)] = 1;
      dfs(depth + 1);
      image[static_cast<std::size_t>(v)] = -1;
      used[static_cast<std::size_t>(u)] = 0;
      if (truncated && found.size() >= cap)
        return;
    }
  }
};

}  // namespace

AutomorphismSet automorphisms(const MolGraph &g, std::size_t cap) {
  AutomorphismSet result;
  if (cap == 0)
    cap = 1;
  if (g.node_count() == 0) {
    result.perms.push_back(Permutation{});
    return result;
  }

  Search search(g, cap);
  search.dfs(0);
  result.perms = std::move(search.found);
  result.truncated = search.truncated;

  // The identity is found by the search; keep it first for callers that
  // use perms[0] as the index-matched baseline.
  auto is_identity = [](const Permutation &p) {
    for (int i = 0; i < p.size(); ++i) {
      if (p[i] != i)
        return false;
    }
    return true;
  };
  auto it = std::find_if(result.perms.begin(), result.perms.end(), is_identity);
  if (it == result.perms.end()) {
    // Only reachable under truncation; the identity must always be present.
    Permutation identity;
    identity.mapping.resize(static_cast<std::size_t>(g.node_count()));
    for (int i = 0; i < g.node_count(); ++i)
      identity.mapping[static_cast<std::size_t>(i)] = i;
    result.perms.back() = std::move(identity);
    it = result.perms.end() - 1;
  }
  std::rotate(result.perms.begin(), it, it + 1);
  return result;
}

}  // namespace dockaudit
