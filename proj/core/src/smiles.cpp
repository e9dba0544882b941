//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/smiles.hpp"

#include <array>
#include <cctype>
#include <map>
#include <string>

#include "dockaudit/error.hpp"
#include "graph_internal.hpp"

namespace dockaudit {

namespace {

[[noreturn]] void fail(std::size_t pos, const std::string &what) {
  throw ParseError("SMILES", 0,
                   what + " at position " + std::to_string(pos + 1));
}

// Pending bond symbol between atoms: 0 = unspecified.
enum class BondSym : char {
  None = 0,
  Single,
  Double,
  Triple,
  Aromatic,
};

struct PendingNode {
  GraphNode node;
  bool bracket = false;   // bracket atoms carry explicit H counts
  bool is_hydrogen = false;
};

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  // Raw graph before hydrogen folding: may contain [H] nodes.
  std::vector<PendingNode> nodes;
  struct RawEdge {
    int a, b;
    BondSym sym;
  };
  std::vector<RawEdge> edges;

  int prev = -1;
  BondSym pending = BondSym::None;
  std::vector<int> branch_stack;
  // ring number -> (atom, bond symbol at opening)
  std::map<int, std::pair<int, BondSym>> open_rings;

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  char take() { return s[pos++]; }

  void add_atom(PendingNode node) {
    nodes.push_back(node);
    int idx = static_cast<int>(nodes.size()) - 1;
    if (prev >= 0)
      edges.push_back({prev, idx, pending});
    pending = BondSym::None;
    prev = idx;
  }

  void close_ring(int number) {
    auto it = open_rings.find(number);
    if (it == open_rings.end()) {
      open_rings.emplace(number, std::make_pair(prev, pending));
      pending = BondSym::None;
      return;
    }
    auto [other, open_sym] = it->second;
    open_rings.erase(it);
    if (other == prev)
      fail(pos, "ring closure to the same atom");
    BondSym sym = pending;
    if (sym == BondSym::None)
      sym = open_sym;
    else if (open_sym != BondSym::None && open_sym != sym)
      fail(pos, "conflicting ring bond orders");
    edges.push_back({other, prev, sym});
    pending = BondSym::None;
  }

  void parse_ring_digit() {
    if (prev < 0)
      fail(pos, "ring closure before any atom");
    char c = take();
    if (c == '%') {
      if (pos + 1 >= s.size() ||
          !std::isdigit(static_cast<unsigned char>(s[pos])) ||
          !std::isdigit(static_cast<unsigned char>(s[pos + 1])))
        fail(pos, "malformed %nn ring closure");
      int number = (s[pos] - '0') * 10 + (s[pos + 1] - '0');
      pos += 2;
      close_ring(number);
    } else {
      close_ring(c - '0');
    }
  }

  Element element_or_fail(std::string_view sym, std::size_t at) {
    auto e = element_from_symbol(sym);
    if (!e)
      fail(at, "unknown element '" + std::string(sym) + "'");
    return *e;
  }

  void parse_organic_atom() {
    std::size_t at = pos;
    char c = take();
    PendingNode pn;
    if (c == 'C' && !done() && peek() == 'l') {
      take();
      pn.node.element = Element::Cl;
    } else if (c == 'B' && !done() && peek() == 'r') {
      take();
      pn.node.element = Element::Br;
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      static constexpr std::string_view organic = "BCNOPSFI";
      if (organic.find(c) == std::string_view::npos)
        fail(at, std::string("element '") + c + "' needs brackets");
      pn.node.element = element_or_fail(std::string_view(&c, 1), at);
    } else {
      static constexpr std::string_view aromatic = "bcnops";
      if (aromatic.find(c) == std::string_view::npos)
        fail(at, std::string("unexpected character '") + c + "'");
      char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      pn.node.element = element_or_fail(std::string_view(&upper, 1), at);
      pn.node.aromatic = true;
    }
    add_atom(pn);
  }

  void parse_bracket_atom() {
    std::size_t at = pos;
    take();  // '['
    // isotope (ignored)
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
      take();
    if (done())
      fail(at, "unterminated bracket atom");

    PendingNode pn;
    pn.bracket = true;
    char c = take();
    std::string sym(1, c);
    if (std::islower(static_cast<unsigned char>(c))) {
      static constexpr std::string_view aromatic = "bcnops";
      if (aromatic.find(c) == std::string_view::npos)
        fail(at, std::string("unknown aromatic atom '") + c + "'");
      pn.node.aromatic = true;
      sym[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    } else if (!std::isupper(static_cast<unsigned char>(c))) {
      fail(at, "malformed bracket atom");
    } else if (!done() && std::islower(static_cast<unsigned char>(peek()))) {
      // Two-letter symbol, except when the lowercase letter is the H-count
      // marker of a one-letter element ([CH4] vs [Cl]).
      std::string two = sym + peek();
      if (element_from_symbol(two)) {
        sym = two;
        take();
      }
    }
    pn.node.element = element_or_fail(sym, at);
    pn.is_hydrogen = pn.node.element == Element::H;

    // chirality (ignored)
    while (!done() && peek() == '@')
      take();

    // explicit hydrogen count
    if (!done() && peek() == 'H') {
      take();
      int h = 1;
      if (!done() && std::isdigit(static_cast<unsigned char>(peek())))
        h = take() - '0';
      pn.node.h_count = h;
    }

    // formal charge
    if (!done() && (peek() == '+' || peek() == '-')) {
      char sign_char = take();
      int sign = sign_char == '+' ? 1 : -1;
      int magnitude = 1;
      if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        magnitude = take() - '0';
        while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
          magnitude = magnitude * 10 + (take() - '0');
      } else {
        while (!done() && peek() == sign_char) {
          take();
          ++magnitude;
        }
      }
      pn.node.formal_charge = sign * magnitude;
    }

    // atom class (ignored)
    if (!done() && peek() == ':') {
      take();
      if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail(pos, "malformed atom class");
      while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
        take();
    }

    if (done() || take() != ']')
      fail(at, "unterminated bracket atom");
    add_atom(pn);
  }

  void run() {
    while (!done()) {
      char c = peek();
      if (c == '(') {
        take();
        if (prev < 0)
          fail(pos - 1, "branch before any atom");
        branch_stack.push_back(prev);
      } else if (c == ')') {
        take();
        if (branch_stack.empty())
          fail(pos - 1, "unbalanced ')'");
        prev = branch_stack.back();
        branch_stack.pop_back();
      } else if (c == '-') {
        take();
        pending = BondSym::Single;
      } else if (c == '=') {
        take();
        pending = BondSym::Double;
      } else if (c == '#') {
        take();
        pending = BondSym::Triple;
      } else if (c == ':') {
        take();
        pending = BondSym::Aromatic;
      } else if (c == '/' || c == '\\') {
        // stereo bonds are treated as single
        take();
        pending = BondSym::Single;
      } else if (c == '.') {
        take();
        if (pending != BondSym::None)
          fail(pos - 1, "bond before '.'");
        prev = -1;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        parse_ring_digit();
      } else if (c == '[') {
        parse_bracket_atom();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        parse_organic_atom();
      } else if (c == ' ' || c == '\t') {
        // trailing title field, per .smi convention: stop at whitespace
        break;
      } else {
        fail(pos, std::string("unexpected character '") + c + "'");
      }
    }
    if (!branch_stack.empty())
      fail(s.size() - 1, "unbalanced '('");
    if (!open_rings.empty())
      fail(s.size() - 1, "unclosed ring bond " +
                             std::to_string(open_rings.begin()->first));
  }
};

struct ValenceSet {
  Element element;
  std::array<int, 3> valences;  // 0-terminated
};

constexpr ValenceSet kValences[] = {
    {Element::B, {3, 0, 0}},  {Element::C, {4, 0, 0}},
    {Element::N, {3, 5, 0}},  {Element::O, {2, 0, 0}},
    {Element::P, {3, 5, 0}},  {Element::S, {2, 4, 6}},
    {Element::F, {1, 0, 0}},  {Element::Cl, {1, 0, 0}},
    {Element::Br, {1, 0, 0}}, {Element::I, {1, 0, 0}},
};

int implicit_hydrogens(Element e, int used, std::size_t /*pos*/) {
  for (const ValenceSet &v : kValences) {
    if (v.element != e)
      continue;
    for (int valence : v.valences) {
      if (valence == 0)
        break;
      if (valence >= used)
        return valence - used;
    }
    throw ParseError("SMILES", 0,
                     "valence violation on " + std::string(element_symbol(e)) +
                         " (" + std::to_string(used) + " bonds)");
  }
  return 0;  // metals etc. only occur in brackets, which never reach here
}

}  // namespace

MolGraph parse_smiles(std::string_view smiles) {
  if (smiles.empty())
    throw ParseError("SMILES", 0, "empty input");

  Parser parser{smiles};
  parser.run();

  // Resolve unspecified bonds between aromatic atoms: aromatic inside an
  // aromatic ring, single otherwise. Build the graph with provisional
  // classes, then let ring normalization upgrade in-cycle bonds.
  const int raw_n = static_cast<int>(parser.nodes.size());
  std::vector<int> heavy_index(static_cast<std::size_t>(raw_n), -1);
  MolGraph g;
  for (int i = 0; i < raw_n; ++i) {
    if (parser.nodes[static_cast<std::size_t>(i)].is_hydrogen)
      continue;
    heavy_index[static_cast<std::size_t>(i)] =
        g.add_node(parser.nodes[static_cast<std::size_t>(i)].node);
  }
  if (g.node_count() == 0)
    throw ParseError("SMILES", 0, "no heavy atoms");

  std::vector<int> used(static_cast<std::size_t>(raw_n), 0);
  std::vector<char> default_aromatic;  // per graph edge
  for (const auto &e : parser.edges) {
    const auto &na = parser.nodes[static_cast<std::size_t>(e.a)];
    const auto &nb = parser.nodes[static_cast<std::size_t>(e.b)];

    BondSym sym = e.sym;
    bool is_default = false;
    if (sym == BondSym::None) {
      is_default = na.node.aromatic && nb.node.aromatic;
      sym = is_default ? BondSym::Aromatic : BondSym::Single;
    }

    if (na.is_hydrogen || nb.is_hydrogen) {
      if (sym != BondSym::Single)
        throw ParseError("SMILES", 0, "non-single bond to hydrogen");
      if (na.is_hydrogen && nb.is_hydrogen)
        throw ParseError("SMILES", 0, "H-H bond");
      int heavy = na.is_hydrogen ? heavy_index[static_cast<std::size_t>(e.b)]
                                 : heavy_index[static_cast<std::size_t>(e.a)];
      ++g.node(heavy).h_count;
      used[static_cast<std::size_t>(na.is_hydrogen ? e.b : e.a)] += 1;
      continue;
    }

    EdgeClass cls = EdgeClass::Single;
    int order_value = 1;
    switch (sym) {
    case BondSym::Single: cls = EdgeClass::Single; order_value = 1; break;
    case BondSym::Double: cls = EdgeClass::Double; order_value = 2; break;
    case BondSym::Triple: cls = EdgeClass::Triple; order_value = 3; break;
    case BondSym::Aromatic: cls = EdgeClass::Aromatic; order_value = 1; break;
    case BondSym::None: break;
    }
    g.add_edge(heavy_index[static_cast<std::size_t>(e.a)],
               heavy_index[static_cast<std::size_t>(e.b)], cls);
    default_aromatic.push_back(is_default ? 1 : 0);
    used[static_cast<std::size_t>(e.a)] += order_value;
    used[static_cast<std::size_t>(e.b)] += order_value;
  }

  // A default bond between two aromatic atoms is aromatic only inside an
  // aromatic ring; across ring systems (the biphenyl link) it is single.
  // Probe with defaults demoted, let ring normalization restore the
  // in-cycle ones, and keep single whatever stayed out of a cycle.
  {
    MolGraph probe = g;
    for (int i = 0; i < static_cast<int>(probe.edges().size()); ++i) {
      if (default_aromatic[static_cast<std::size_t>(i)])
        probe.edge(i).cls = EdgeClass::Single;
    }
    detail::normalize_aromatic_rings(probe);
    for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
      if (default_aromatic[static_cast<std::size_t>(i)])
        g.edge(i).cls = probe.edges()[static_cast<std::size_t>(i)].cls;
    }
  }

  // Implicit hydrogens for organic-subset (non-bracket) atoms.
  for (int i = 0; i < raw_n; ++i) {
    const auto &pn = parser.nodes[static_cast<std::size_t>(i)];
    if (pn.is_hydrogen || pn.bracket)
      continue;
    int idx = heavy_index[static_cast<std::size_t>(i)];
    int total_used = used[static_cast<std::size_t>(i)] + (pn.node.aromatic ? 1 : 0);
    g.node(idx).h_count += implicit_hydrogens(pn.node.element, total_used, 0);
  }

  return g;
}

}  // namespace dockaudit
