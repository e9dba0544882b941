//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/sdf.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <utility>

#include "dockaudit/error.hpp"
#include "text_util.hpp"

namespace dockaudit {

namespace {

using detail::parse_double;
using detail::parse_int;
using detail::split_lines;
using detail::trim;

std::string_view column(std::string_view line, std::size_t pos, std::size_t len) {
  if (pos >= line.size())
    return {};
  return trim(line.substr(pos, std::min(len, line.size() - pos)));
}

// Legacy counts-line charge codes; code 4 is a radical marker, not a charge.
int legacy_charge(int code) {
  switch (code) {
  case 1: return 3;
  case 2: return 2;
  case 3: return 1;
  case 5: return -1;
  case 6: return -2;
  case 7: return -3;
  default: return 0;
  }
}

Molecule parse_record(const std::vector<std::string_view> &lines, int first,
                      int last /* index of $$$$ or size */) {
  Molecule mol;
  if (last - first < 4)
    throw ParseError("SDF", first + 1, "truncated record header");

  mol.name = std::string(trim(lines[static_cast<std::size_t>(first)]));
  const int counts_idx = first + 3;
  std::string_view counts = lines[static_cast<std::size_t>(counts_idx)];
  if (counts.find("V3000") != std::string_view::npos)
    throw ParseError("SDF", counts_idx + 1,
                     "V3000 connection tables are not supported");
  auto n_atoms = parse_int(column(counts, 0, 3));
  auto n_bonds = parse_int(column(counts, 3, 3));
  if (!n_atoms || !n_bonds || *n_atoms < 0 || *n_bonds < 0)
    throw ParseError("SDF", counts_idx + 1, "malformed counts line");

  int cursor = counts_idx + 1;
  if (cursor + *n_atoms + *n_bonds > last)
    throw ParseError("SDF", counts_idx + 1,
                     "counts line does not match block length");

  bool any_mchg = false;
  for (int k = 0; k < *n_atoms; ++k, ++cursor) {
    std::string_view line = lines[static_cast<std::size_t>(cursor)];
    auto x = parse_double(column(line, 0, 10));
    auto y = parse_double(column(line, 10, 10));
    auto z = parse_double(column(line, 20, 10));
    std::string_view sym = column(line, 31, 3);
    if (!x || !y || !z || sym.empty())
      throw ParseError("SDF", cursor + 1, "malformed atom line");
    auto element = element_from_symbol(sym);
    if (!element)
      throw ParseError("SDF", cursor + 1,
                       "unknown element '" + std::string(sym) + "'");
    Atom atom;
    atom.element = *element;
    atom.position = Eigen::Vector3d(*x, *y, *z);
    atom.name = std::string(sym) + std::to_string(k + 1);
    if (auto code = parse_int(column(line, 36, 3)); code)
      atom.formal_charge = legacy_charge(*code);
    mol.atoms.push_back(std::move(atom));
  }

  std::set<std::pair<int, int>> seen;
  for (int k = 0; k < *n_bonds; ++k, ++cursor) {
    std::string_view line = lines[static_cast<std::size_t>(cursor)];
    auto a = parse_int(column(line, 0, 3));
    auto b = parse_int(column(line, 3, 3));
    auto t = parse_int(column(line, 6, 3));
    if (!a || !b || !t)
      throw ParseError("SDF", cursor + 1, "malformed bond line");
    Bond bond;
    bond.a = *a - 1;
    bond.b = *b - 1;
    if (bond.a < 0 || bond.a >= *n_atoms || bond.b < 0 || bond.b >= *n_atoms)
      throw ParseError("SDF", cursor + 1, "bond index out of range");
    if (bond.a == bond.b)
      throw ParseError("SDF", cursor + 1, "self bond");
    if (!seen.insert(std::minmax(bond.a, bond.b)).second)
      throw ParseError("SDF", cursor + 1, "duplicate bond");
    switch (*t) {
    case 1: bond.order = BondOrder::Single; break;
    case 2: bond.order = BondOrder::Double; break;
    case 3: bond.order = BondOrder::Triple; break;
    case 4: bond.order = BondOrder::Aromatic; break;
    default:
      throw ParseError("SDF", cursor + 1,
                       "unsupported bond order " + std::to_string(*t));
    }
    mol.bonds.push_back(bond);
  }

  // Property block up to M  END.
  bool saw_end = false;
  for (; cursor < last; ++cursor) {
    std::string_view line = lines[static_cast<std::size_t>(cursor)];
    if (line.substr(0, 6) == "M  END") {
      saw_end = true;
      ++cursor;
      break;
    }
    if (line.substr(0, 6) == "M  CHG") {
      if (!any_mchg) {
        // M CHG supersedes every legacy charge column.
        for (Atom &a : mol.atoms)
          a.formal_charge = 0;
        any_mchg = true;
      }
      auto fields = detail::split_fields(line.substr(6));
      if (fields.empty())
        throw ParseError("SDF", cursor + 1, "malformed M  CHG line");
      auto n = parse_int(fields[0]);
      if (!n || fields.size() != 1 + 2 * static_cast<std::size_t>(*n))
        throw ParseError("SDF", cursor + 1, "malformed M  CHG line");
      for (int k = 0; k < *n; ++k) {
        auto idx = parse_int(fields[static_cast<std::size_t>(1 + 2 * k)]);
        auto chg = parse_int(fields[static_cast<std::size_t>(2 + 2 * k)]);
        if (!idx || !chg || *idx < 1 || *idx > *n_atoms)
          throw ParseError("SDF", cursor + 1, "M  CHG index out of range");
        mol.atoms[static_cast<std::size_t>(*idx - 1)].formal_charge = *chg;
      }
    }
  }
  if (!saw_end)
    throw ParseError("SDF", last, "missing M  END");

  // Data fields: "> <key>" followed by value lines, blank-line terminated.
  while (cursor < last) {
    std::string_view line = lines[static_cast<std::size_t>(cursor)];
    if (trim(line).empty()) {
      ++cursor;
      continue;
    }
    if (line.front() != '>')
      throw ParseError("SDF", cursor + 1, "unexpected content in data block");
    std::size_t lt = line.find('<');
    std::size_t gt = line.rfind('>');
    if (lt == std::string_view::npos || gt == std::string_view::npos || gt <= lt)
      throw ParseError("SDF", cursor + 1, "malformed data header");
    std::string key(line.substr(lt + 1, gt - lt - 1));
    ++cursor;
    std::string value;
    while (cursor < last &&
           !trim(lines[static_cast<std::size_t>(cursor)]).empty()) {
      if (!value.empty())
        value += '\n';
      value += std::string(lines[static_cast<std::size_t>(cursor)]);
      ++cursor;
    }
    mol.data[key] = value;
  }

  return mol;
}

}  // namespace

std::vector<Molecule> parse_sdf(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<Molecule> mols;
  int start = 0;
  const int n = static_cast<int>(lines.size());
  while (start < n) {
    // Skip blank padding between records.
    while (start < n && trim(lines[static_cast<std::size_t>(start)]).empty())
      ++start;
    if (start >= n)
      break;
    int end = start;
    while (end < n &&
           trim(lines[static_cast<std::size_t>(end)]).substr(0, 4) != "$$$$")
      ++end;
    mols.push_back(parse_record(lines, start, end));
    start = end + 1;
  }
  return mols;
}

std::string write_sdf(std::span<const Molecule> mols) {
  std::string out;
  char buf[128];
  for (const Molecule &mol : mols) {
    out += mol.name;
    out += "\n  dockaudit\n\n";
    std::snprintf(buf, sizeof buf, "%3d%3d  0  0  0  0  0  0  0  0999 V2000\n",
                  static_cast<int>(mol.atoms.size()),
                  static_cast<int>(mol.bonds.size()));
    out += buf;
    for (const Atom &a : mol.atoms) {
      std::snprintf(buf, sizeof buf,
                    "%10.4f%10.4f%10.4f %-3s 0  0  0  0  0  0  0  0  0  0  0  0\n",
                    a.position.x(), a.position.y(), a.position.z(),
                    std::string(element_symbol(a.element)).c_str());
      out += buf;
    }
    for (const Bond &b : mol.bonds) {
      int order = 1;
      switch (b.order) {
      case BondOrder::Single:
      case BondOrder::AmideSingle: order = 1; break;
      case BondOrder::Double: order = 2; break;
      case BondOrder::Triple: order = 3; break;
      case BondOrder::Aromatic: order = 4; break;
      }
      std::snprintf(buf, sizeof buf, "%3d%3d%3d  0\n", b.a + 1, b.b + 1, order);
      out += buf;
    }
    std::vector<std::pair<int, int>> charges;
    for (int i = 0; i < static_cast<int>(mol.atoms.size()); ++i) {
      int c = mol.atoms[static_cast<std::size_t>(i)].formal_charge;
      if (c != 0)
        charges.emplace_back(i + 1, c);
    }
    for (std::size_t i = 0; i < charges.size(); i += 8) {
      std::size_t chunk = std::min<std::size_t>(8, charges.size() - i);
      std::snprintf(buf, sizeof buf, "M  CHG%3d", static_cast<int>(chunk));
      out += buf;
      for (std::size_t k = i; k < i + chunk; ++k) {
        std::snprintf(buf, sizeof buf, " %3d %3d", charges[k].first,
                      charges[k].second);
        out += buf;
      }
      out += '\n';
    }
    out += "M  END\n";
    for (const auto &[key, value] : mol.data) {
      out += "> <" + key + ">\n";
      out += value;
      out += "\n\n";
    }
    out += "$$$$\n";
  }
  return out;
}

}  // namespace dockaudit
