//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/graph.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "dockaudit/error.hpp"
#include "dockaudit/smiles.hpp"
#include "graph_internal.hpp"

namespace dockaudit {

int MolGraph::add_node(GraphNode node) {
  nodes_.push_back(node);
  adj_.emplace_back();
  return static_cast<int>(nodes_.size()) - 1;
}

void MolGraph::add_edge(int a, int b, EdgeClass cls) {
  if (a == b || a < 0 || b < 0 || a >= node_count() || b >= node_count())
    throw Error("invalid graph edge");
  if (edge_class(a, b))
    throw Error("duplicate graph edge");
  int idx = static_cast<int>(edges_.size());
  edges_.push_back({a, b, cls});
  adj_[static_cast<std::size_t>(a)].emplace_back(b, idx);
  adj_[static_cast<std::size_t>(b)].emplace_back(a, idx);
}

std::optional<EdgeClass> MolGraph::edge_class(int a, int b) const {
  for (auto [nbr, edge] : adj_[static_cast<std::size_t>(a)]) {
    if (nbr == b)
      return edges_[static_cast<std::size_t>(edge)].cls;
  }
  return std::nullopt;
}

namespace detail {

// Marks every edge that lies on a cycle of the subgraph induced by
// aromatic-flagged nodes as EdgeClass::Aromatic. Bridge edges of that
// subgraph are left alone. Used to reconcile Kekule-form input with
// aromatic-form input of the same ring system.
void normalize_aromatic_rings(MolGraph &g) {
  const int n = g.node_count();
  // DFS bridge finding restricted to edges whose endpoints are both
  // aromatic-flagged.
  std::vector<int> tin(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> is_bridge(g.edges().size(), 0);
  int timer = 0;

  auto considered = [&](const GraphEdge &e) {
    return g.node(e.a).aromatic && g.node(e.b).aromatic;
  };

  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (tin[static_cast<std::size_t>(root)] != -1 || !g.node(root).aromatic)
      continue;
    std::vector<Frame> stack;
    tin[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame &f = stack.back();
      const auto &nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        auto [u, eidx] = nbrs[f.next++];
        const GraphEdge &e = g.edges()[static_cast<std::size_t>(eidx)];
        if (!considered(e) || eidx == f.parent_edge)
          continue;
        if (tin[static_cast<std::size_t>(u)] != -1) {
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], tin[static_cast<std::size_t>(u)]);
        } else {
          tin[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
          stack.push_back({u, eidx, 0});
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          Frame &p = stack.back();
          low[static_cast<std::size_t>(p.v)] =
              std::min(low[static_cast<std::size_t>(p.v)], low[static_cast<std::size_t>(f.v)]);
          if (low[static_cast<std::size_t>(f.v)] > tin[static_cast<std::size_t>(p.v)])
            is_bridge[static_cast<std::size_t>(f.parent_edge)] = 1;
        }
      }
    }
  }

  for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
    GraphEdge &e = g.edge(i);
    if (g.node(e.a).aromatic && g.node(e.b).aromatic &&
        !is_bridge[static_cast<std::size_t>(i)] &&
        // only edges actually inside some aromatic cycle qualify; isolated
        // aromatic-aromatic contacts (tin unset) cannot happen here since
        // both endpoints were traversed
        tin[static_cast<std::size_t>(e.a)] != -1) {
      e.cls = EdgeClass::Aromatic;
    }
  }
}

std::vector<int> initial_colors(const MolGraph &g) {
  using Seed = std::tuple<int, int, int, int, int>;
  std::vector<Seed> seeds(static_cast<std::size_t>(g.node_count()));
  for (int v = 0; v < g.node_count(); ++v) {
    const GraphNode &n = g.node(v);
    seeds[static_cast<std::size_t>(v)] =
        Seed(atomic_number(n.element), n.formal_charge, n.aromatic ? 1 : 0,
             n.h_count, g.degree(v));
  }
  std::vector<Seed> sorted = seeds;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> colors(seeds.size());
  for (std::size_t v = 0; v < seeds.size(); ++v) {
    colors[v] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), seeds[v]) - sorted.begin());
  }
  return colors;
}

std::vector<int> refine_colors(const MolGraph &g, std::vector<int> colors) {
  using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
  const int n = g.node_count();
  int classes = 0;
  for (int c : colors)
    classes = std::max(classes, c + 1);

  while (true) {
    std::vector<Sig> sigs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nbr;
      nbr.reserve(g.neighbors(v).size());
      for (auto [u, eidx] : g.neighbors(v)) {
        nbr.emplace_back(static_cast<int>(g.edges()[static_cast<std::size_t>(eidx)].cls),
                         colors[static_cast<std::size_t>(u)]);
      }
      std::sort(nbr.begin(), nbr.end());
      sigs[static_cast<std::size_t>(v)] = {colors[static_cast<std::size_t>(v)],
                                           std::move(nbr)};
    }
    std::vector<Sig> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (static_cast<int>(sorted.size()) == classes)
      return colors;
    classes = static_cast<int>(sorted.size());
    for (int v = 0; v < n; ++v) {
      colors[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sigs[static_cast<std::size_t>(v)]) -
          sorted.begin());
    }
  }
}

int first_nonsingleton_cell(const std::vector<int> &colors) {
  std::map<int, int> cell_size;
  for (int c : colors)
    ++cell_size[c];
  for (const auto &[color, size] : cell_size) {
    if (size > 1)
      return color;
  }
  return -1;
}

std::vector<int> individualize(const std::vector<int> &colors, int v) {
  std::vector<int> out(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i)
    out[i] = colors[i] * 2;
  out[static_cast<std::size_t>(v)] -= 1;
  return out;
}

}  // namespace detail

namespace {

std::string form_from_discrete(const MolGraph &g, const std::vector<int> &colors) {
  const int n = g.node_count();
  std::string form;
  form.reserve(static_cast<std::size_t>(n) * 12);
  form += "n";
  form += std::to_string(n);
  form += ";";

  std::vector<int> order(static_cast<std::size_t>(n));  // canonical rank -> node
  for (int v = 0; v < n; ++v)
    order[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = v;
  for (int r = 0; r < n; ++r) {
    const GraphNode &node = g.node(order[static_cast<std::size_t>(r)]);
    form += std::to_string(atomic_number(node.element));
    form += ",";
    form += std::to_string(node.formal_charge);
    form += ",";
    form += node.aromatic ? "1" : "0";
    form += ",";
    form += std::to_string(node.h_count);
    form += ";";
  }
  std::vector<std::tuple<int, int, int>> edges;
  edges.reserve(g.edges().size());
  for (const GraphEdge &e : g.edges()) {
    int ra = colors[static_cast<std::size_t>(e.a)];
    int rb = colors[static_cast<std::size_t>(e.b)];
    edges.emplace_back(std::min(ra, rb), std::max(ra, rb), static_cast<int>(e.cls));
  }
  std::sort(edges.begin(), edges.end());
  for (const auto &[a, b, cls] : edges) {
    form += std::to_string(a);
    form += "-";
    form += std::to_string(b);
    form += ":";
    form += std::to_string(cls);
    form += ";";
  }
  return form;
}

struct CanonicalSearch {
  const MolGraph &g;
  std::string best_form;
  std::vector<int> best_labels;
  bool have_best = false;

  void run(std::vector<int> colors) {
    colors = detail::refine_colors(g, std::move(colors));
    int cell = detail::first_nonsingleton_cell(colors);
    if (cell < 0) {
      std::string form = form_from_discrete(g, colors);
      if (!have_best || form < best_form) {
        best_form = std::move(form);
        best_labels = colors;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < g.node_count(); ++v) {
      if (colors[static_cast<std::size_t>(v)] == cell)
        run(detail::individualize(colors, v));
    }
  }
};

}  // namespace

MolGraph from_molecule(const Molecule &mol) {
  mol.validate();

  std::vector<int> node_of(mol.atoms.size(), -1);
  MolGraph g;
  for (int i = 0; i < static_cast<int>(mol.atoms.size()); ++i) {
    const Atom &a = mol.atoms[static_cast<std::size_t>(i)];
    if (!a.is_heavy())
      continue;
    GraphNode node;
    node.element = a.element;
    node.formal_charge = a.formal_charge;
    node.aromatic = a.aromatic_hint;
    node_of[static_cast<std::size_t>(i)] = g.add_node(node);
  }
  if (g.node_count() == 0)
    throw Error("molecule '" + mol.name + "' has no heavy atoms");

  for (const Bond &b : mol.bonds) {
    const bool heavy_a = mol.atoms[static_cast<std::size_t>(b.a)].is_heavy();
    const bool heavy_b = mol.atoms[static_cast<std::size_t>(b.b)].is_heavy();
    if (heavy_a && heavy_b) {
      EdgeClass cls = EdgeClass::Single;
      switch (b.order) {
      case BondOrder::Single:
      case BondOrder::AmideSingle: cls = EdgeClass::Single; break;
      case BondOrder::Double: cls = EdgeClass::Double; break;
      case BondOrder::Triple: cls = EdgeClass::Triple; break;
      case BondOrder::Aromatic: cls = EdgeClass::Aromatic; break;
      }
      int na = node_of[static_cast<std::size_t>(b.a)];
      int nb = node_of[static_cast<std::size_t>(b.b)];
      if (cls == EdgeClass::Aromatic) {
        g.node(na).aromatic = true;
        g.node(nb).aromatic = true;
      }
      g.add_edge(na, nb, cls);
    } else if (heavy_a != heavy_b) {
      int heavy = heavy_a ? node_of[static_cast<std::size_t>(b.a)]
                          : node_of[static_cast<std::size_t>(b.b)];
      ++g.node(heavy).h_count;
    }
    // H-H bonds have no heavy endpoint and are dropped.
  }

  detail::normalize_aromatic_rings(g);
  return g;
}

std::vector<int> canonical_labels(const MolGraph &g) {
  if (g.node_count() == 0)
    return {};
  CanonicalSearch search{g};
  search.run(detail::initial_colors(g));
  return search.best_labels;
}

std::string canonical_form(const MolGraph &g) {
  if (g.node_count() == 0)
    return "n0;";
  CanonicalSearch search{g};
  search.run(detail::initial_colors(g));
  return search.best_form;
}

bool graphs_identical(const MolGraph &a, const MolGraph &b) {
  if (a.node_count() != b.node_count() ||
      a.edges().size() != b.edges().size())
    return false;
  return canonical_form(a) == canonical_form(b);
}

bool verify_ligand(const Molecule &candidate, std::string_view curated_smiles) {
  MolGraph curated = parse_smiles(curated_smiles);
  return graphs_identical(from_molecule(candidate), curated);
}

}  // namespace dockaudit
