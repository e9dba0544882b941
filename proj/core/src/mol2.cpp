//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/mol2.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <utility>

#include "dockaudit/error.hpp"
#include "text_util.hpp"

namespace dockaudit {

namespace {

using detail::parse_double;
using detail::parse_int;
using detail::split_fields;
using detail::split_lines;
using detail::trim;

struct SybylType {
  std::string_view type;
  Element element;
  bool aromatic;
};

// The conformance table for SYBYL atom types. Unknown types are hard
// errors; a silently misassigned element corrupts every downstream RMSD.
constexpr SybylType kSybylTypes[] = {
    {"C.3", Element::C, false},    {"C.2", Element::C, false},
    {"C.1", Element::C, false},    {"C.ar", Element::C, true},
    {"C.cat", Element::C, false},  {"N.3", Element::N, false},
    {"N.2", Element::N, false},    {"N.1", Element::N, false},
    {"N.ar", Element::N, true},    {"N.am", Element::N, false},
    {"N.pl3", Element::N, false},  {"N.4", Element::N, false},
    {"O.3", Element::O, false},    {"O.2", Element::O, false},
    {"O.co2", Element::O, false},  {"O.spc", Element::O, false},
    {"O.t3p", Element::O, false},  {"S.3", Element::S, false},
    {"S.2", Element::S, false},    {"S.O", Element::S, false},
    {"S.O2", Element::S, false},   {"S.o", Element::S, false},
    {"S.o2", Element::S, false},   {"P.3", Element::P, false},
    {"H", Element::H, false},      {"H.spc", Element::H, false},
    {"H.t3p", Element::H, false},  {"F", Element::F, false},
    {"Cl", Element::Cl, false},    {"Br", Element::Br, false},
    {"I", Element::I, false},      {"Li", Element::Li, false},
    {"Na", Element::Na, false},    {"Mg", Element::Mg, false},
    {"Si", Element::Si, false},    {"K", Element::K, false},
    {"Ca", Element::Ca, false},    {"Mn", Element::Mn, false},
    {"Fe", Element::Fe, false},    {"Co.oh", Element::Co, false},
    {"Co", Element::Co, false},    {"Ni", Element::Ni, false},
    {"Cu", Element::Cu, false},    {"Zn", Element::Zn, false},
    {"Se", Element::Se, false},    {"B", Element::B, false},
};

const SybylType *lookup_sybyl(std::string_view type) {
  for (const SybylType &t : kSybylTypes) {
    if (t.type == type)
      return &t;
  }
  return nullptr;
}

bool is_section(std::string_view line) {
  return trim(line).substr(0, 9) == "@<TRIPOS>";
}

std::string_view section_name(std::string_view line) {
  return trim(line).substr(9);
}

struct RecordSpan {
  int header_line;  // index of @<TRIPOS>MOLECULE
  int end_line;     // one past the last line of the record
};

Molecule parse_record(const std::vector<std::string_view> &lines,
                      const RecordSpan &span) {
  Molecule mol;

  int cursor = span.header_line + 1;
  if (cursor >= span.end_line)
    throw ParseError("MOL2", span.header_line + 1, "truncated MOLECULE record");
  mol.name = std::string(trim(lines[static_cast<std::size_t>(cursor)]));
  ++cursor;
  if (cursor >= span.end_line)
    throw ParseError("MOL2", cursor, "missing counts line");

  auto counts = split_fields(lines[static_cast<std::size_t>(cursor)]);
  if (counts.empty())
    throw ParseError("MOL2", cursor + 1, "malformed counts line");
  auto n_atoms = parse_int(counts[0]);
  auto n_bonds = counts.size() > 1 ? parse_int(counts[1]) : std::optional<int>(0);
  if (!n_atoms || *n_atoms < 0 || !n_bonds || *n_bonds < 0)
    throw ParseError("MOL2", cursor + 1, "malformed counts line");

  int atom_section = -1, bond_section = -1;
  for (int i = cursor + 1; i < span.end_line; ++i) {
    std::string_view line = lines[static_cast<std::size_t>(i)];
    if (!is_section(line))
      continue;
    std::string_view name = section_name(line);
    if (name == "ATOM")
      atom_section = i;
    else if (name == "BOND")
      bond_section = i;
  }
  if (atom_section < 0 && *n_atoms > 0)
    throw ParseError("MOL2", span.header_line + 1, "missing @<TRIPOS>ATOM section");

  if (atom_section >= 0) {
    int i = atom_section + 1;
    for (int k = 0; k < *n_atoms; ++k, ++i) {
      while (i < span.end_line &&
             trim(lines[static_cast<std::size_t>(i)]).empty())
        ++i;
      if (i >= span.end_line || is_section(lines[static_cast<std::size_t>(i)]))
        throw ParseError("MOL2", i, "atom count mismatch: expected " +
                                        std::to_string(*n_atoms) + " atoms");
      auto fields = split_fields(lines[static_cast<std::size_t>(i)]);
      if (fields.size() < 6)
        throw ParseError("MOL2", i + 1, "malformed atom line");
      auto x = parse_double(fields[2]);
      auto y = parse_double(fields[3]);
      auto z = parse_double(fields[4]);
      if (!x || !y || !z)
        throw ParseError("MOL2", i + 1, "malformed atom coordinates");
      const SybylType *type = lookup_sybyl(fields[5]);
      if (type == nullptr)
        throw ParseError("MOL2", i + 1,
                         "unknown atom type '" + std::string(fields[5]) + "'");
      Atom atom;
      atom.name = std::string(fields[1]);
      atom.position = Eigen::Vector3d(*x, *y, *z);
      atom.element = type->element;
      atom.aromatic_hint = type->aromatic;
      if (fields.size() >= 8)
        atom.residue = std::string(fields[7]);
      mol.atoms.push_back(std::move(atom));
    }
  }

  if (*n_bonds > 0) {
    if (bond_section < 0)
      throw ParseError("MOL2", span.header_line + 1, "missing @<TRIPOS>BOND section");
    int i = bond_section + 1;
    std::set<std::pair<int, int>> seen;
    for (int k = 0; k < *n_bonds; ++k, ++i) {
      while (i < span.end_line &&
             trim(lines[static_cast<std::size_t>(i)]).empty())
        ++i;
      if (i >= span.end_line || is_section(lines[static_cast<std::size_t>(i)]))
        throw ParseError("MOL2", i, "bond count mismatch: expected " +
                                        std::to_string(*n_bonds) + " bonds");
      auto fields = split_fields(lines[static_cast<std::size_t>(i)]);
      if (fields.size() < 4)
        throw ParseError("MOL2", i + 1, "malformed bond line");
      auto a = parse_int(fields[1]);
      auto b = parse_int(fields[2]);
      if (!a || !b)
        throw ParseError("MOL2", i + 1, "malformed bond indices");
      Bond bond;
      bond.a = *a - 1;
      bond.b = *b - 1;
      const int n = static_cast<int>(mol.atoms.size());
      if (bond.a < 0 || bond.a >= n || bond.b < 0 || bond.b >= n)
        throw ParseError("MOL2", i + 1, "bond index out of range");
      if (bond.a == bond.b)
        throw ParseError("MOL2", i + 1, "self bond");
      if (!seen.insert(std::minmax(bond.a, bond.b)).second)
        throw ParseError("MOL2", i + 1, "duplicate bond");
      std::string_view type = fields[3];
      if (type == "1")
        bond.order = BondOrder::Single;
      else if (type == "2")
        bond.order = BondOrder::Double;
      else if (type == "3")
        bond.order = BondOrder::Triple;
      else if (type == "ar")
        bond.order = BondOrder::Aromatic;
      else if (type == "am")
        bond.order = BondOrder::AmideSingle;
      else
        throw ParseError("MOL2", i + 1,
                         "unknown bond type '" + std::string(type) + "'");
      mol.bonds.push_back(bond);
    }
  }

  return mol;
}

std::string_view sybyl_type_for(const Molecule &mol, int index) {
  const Atom &atom = mol.atoms[static_cast<std::size_t>(index)];
  bool in_aromatic_bond = false;
  bool in_multiple_bond = false;
  bool in_amide_bond = false;
  for (const Bond &b : mol.bonds) {
    if (b.a != index && b.b != index)
      continue;
    if (b.order == BondOrder::Aromatic)
      in_aromatic_bond = true;
    else if (b.order == BondOrder::Double || b.order == BondOrder::Triple)
      in_multiple_bond = true;
    else if (b.order == BondOrder::AmideSingle)
      in_amide_bond = true;
  }
  const bool aromatic = atom.aromatic_hint || in_aromatic_bond;
  switch (atom.element) {
  case Element::C:
    return aromatic ? "C.ar" : (in_multiple_bond ? "C.2" : "C.3");
  case Element::N:
    if (aromatic)
      return "N.ar";
    if (in_amide_bond)
      return "N.am";
    return in_multiple_bond ? "N.2" : "N.3";
  case Element::O:
    return in_multiple_bond ? "O.2" : "O.3";
  case Element::S:
    return in_multiple_bond ? "S.2" : "S.3";
  case Element::P:
    return "P.3";
  default:
    return element_symbol(atom.element);
  }
}

std::string_view mol2_bond_type(BondOrder order) {
  switch (order) {
  case BondOrder::Single:
    return "1";
  case BondOrder::Double:
    return "2";
  case BondOrder::Triple:
    return "3";
  case BondOrder::Aromatic:
    return "ar";
  case BondOrder::AmideSingle:
    return "am";
  }
  return "1";
}

}  // namespace

std::vector<Molecule> parse_mol2(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<RecordSpan> spans;
  for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
    std::string_view line = lines[static_cast<std::size_t>(i)];
    if (is_section(line)) {
      std::string_view name = section_name(line);
      if (name == "MOLECULE") {
        if (!spans.empty())
          spans.back().end_line = i;
        spans.push_back({i, static_cast<int>(lines.size())});
      } else if (spans.empty()) {
        throw ParseError("MOL2", i + 1,
                         "section '" + std::string(name) +
                             "' before @<TRIPOS>MOLECULE");
      }
    }
  }

  std::vector<Molecule> mols;
  mols.reserve(spans.size());
  for (const RecordSpan &span : spans)
    mols.push_back(parse_record(lines, span));
  return mols;
}

std::string write_mol2(std::span<const Molecule> mols) {
  std::string out;
  char buf[160];
  for (const Molecule &mol : mols) {
    out += "@<TRIPOS>MOLECULE\n";
    out += mol.name.empty() ? "*****" : mol.name;
    out += '\n';
    std::snprintf(buf, sizeof buf, "%5d %5d %5d\n",
                  static_cast<int>(mol.atoms.size()),
                  static_cast<int>(mol.bonds.size()), 0);
    out += buf;
    out += "SMALL\nNO_CHARGES\n\n@<TRIPOS>ATOM\n";
    for (int i = 0; i < static_cast<int>(mol.atoms.size()); ++i) {
      const Atom &a = mol.atoms[static_cast<std::size_t>(i)];
      std::string name = a.name.empty()
                             ? std::string(element_symbol(a.element)) +
                                   std::to_string(i + 1)
                             : a.name;
      std::string residue = a.residue.empty() ? "UNL1" : a.residue;
      std::snprintf(buf, sizeof buf,
                    "%7d %-8s %10.4f %10.4f %10.4f %-8s %4d %-8s %10.4f\n",
                    i + 1, name.c_str(), a.position.x(), a.position.y(),
                    a.position.z(),
                    std::string(sybyl_type_for(mol, i)).c_str(), 1,
                    residue.c_str(), 0.0);
      out += buf;
    }
    if (!mol.bonds.empty()) {
      out += "@<TRIPOS>BOND\n";
      for (int i = 0; i < static_cast<int>(mol.bonds.size()); ++i) {
        const Bond &b = mol.bonds[static_cast<std::size_t>(i)];
        std::snprintf(buf, sizeof buf, "%6d %5d %5d %-4s\n", i + 1, b.a + 1,
                      b.b + 1, std::string(mol2_bond_type(b.order)).c_str());
        out += buf;
      }
    }
  }
  return out;
}

}  // namespace dockaudit
