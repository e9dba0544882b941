//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/pdb.hpp"

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "dockaudit/error.hpp"
#include "text_util.hpp"

namespace dockaudit {

namespace {

using detail::parse_double;
using detail::split_lines;
using detail::trim;

constexpr std::array<std::string_view, 23> kStandardResidues = {
    "ALA", "ARG", "ASN", "ASP", "CYS", "GLN", "GLU", "GLY",
    "HIS", "ILE", "LEU", "LYS", "MET", "PHE", "PRO", "SER",
    "THR", "TRP", "TYR", "VAL", "MSE", "SEC", "PYL",
};

bool is_standard_residue(std::string_view name) {
  for (std::string_view r : kStandardResidues) {
    if (r == name)
      return true;
  }
  return false;
}

bool is_water(std::string_view name) {
  return name == "HOH" || name == "WAT";
}

struct RawAtom {
  bool hetatm = false;
  std::string name;
  char altloc = ' ';
  std::string resname;
  char chain = ' ';
  int resseq = 0;
  char icode = ' ';
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  double occupancy = 1.0;
  Element element = Element::C;
  int file_order = 0;
};

Element element_from_pdb(std::string_view line, std::string_view atom_name,
                         bool standard_residue, int line_no) {
  // Columns 77-78 when present; otherwise derive from the atom name.
  if (line.size() >= 78) {
    std::string_view sym = trim(line.substr(76, 2));
    if (!sym.empty()) {
      if (auto e = element_from_symbol(sym); e)
        return *e;
      throw ParseError("PDB", line_no,
                       "unknown element '" + std::string(sym) + "'");
    }
  }
  std::string stripped;
  for (char c : atom_name) {
    if (std::isalpha(static_cast<unsigned char>(c)))
      stripped.push_back(c);
  }
  if (stripped.empty())
    throw ParseError("PDB", line_no, "cannot derive element from atom name");
  // Protein atom names like "CA"/"CB" are carbon; only hetero groups get
  // the two-letter interpretation (Cl, Br, metals).
  if (!standard_residue && stripped.size() >= 2) {
    if (auto e = element_from_symbol(stripped.substr(0, 2)); e)
      return *e;
  }
  if (auto e = element_from_symbol(stripped.substr(0, 1)); e)
    return *e;
  throw ParseError("PDB", line_no,
                   "unknown element for atom name '" + std::string(atom_name) +
                       "'");
}

}  // namespace

StructureFile split_structure(std::string_view text) {
  auto lines = split_lines(text);

  std::vector<RawAtom> atoms;
  // Alternate-location key -> index into `atoms`.
  std::map<std::string, std::size_t> altloc_index;
  bool in_first_model = true;
  bool saw_model = false;
  bool saw_atom_record = false;

  for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
    std::string_view line = lines[static_cast<std::size_t>(i)];
    std::string_view record = line.substr(0, std::min<std::size_t>(6, line.size()));
    if (record.substr(0, 5) == "MODEL") {
      if (saw_model)
        in_first_model = false;
      saw_model = true;
      continue;
    }
    if (record.substr(0, 6) == "ENDMDL") {
      in_first_model = false;
      continue;
    }
    const bool is_atom = record == "ATOM  ";
    const bool is_het = record == "HETATM";
    if (!is_atom && !is_het)
      continue;
    if (is_atom)
      saw_atom_record = true;
    if (!in_first_model)
      continue;
    if (line.size() < 54)
      throw ParseError("PDB", i + 1, "truncated coordinate record");

    RawAtom atom;
    atom.hetatm = is_het;
    atom.name = std::string(trim(line.substr(12, 4)));
    atom.altloc = line[16];
    atom.resname = std::string(trim(line.substr(17, 3)));
    atom.chain = line[21];
    auto resseq = detail::parse_int(trim(line.substr(22, 4)));
    if (!resseq)
      throw ParseError("PDB", i + 1, "malformed residue number");
    atom.resseq = *resseq;
    atom.icode = line[26];
    auto x = parse_double(line.substr(30, 8));
    auto y = parse_double(line.substr(38, 8));
    auto z = parse_double(line.substr(46, 8));
    if (!x || !y || !z)
      throw ParseError("PDB", i + 1, "malformed coordinates");
    atom.position = Eigen::Vector3d(*x, *y, *z);
    if (line.size() >= 60) {
      if (auto occ = parse_double(line.substr(54, 6)); occ)
        atom.occupancy = *occ;
    }
    atom.element =
        element_from_pdb(line, atom.name, is_standard_residue(atom.resname), i + 1);
    atom.file_order = i;

    if (atom.altloc != ' ') {
      std::string key;
      key += atom.chain;
      key += '/';
      key += std::to_string(atom.resseq);
      key += atom.icode;
      key += '/';
      key += atom.resname;
      key += '/';
      key += atom.name;
      auto it = altloc_index.find(key);
      if (it != altloc_index.end()) {
        // Highest occupancy wins; ties keep the earlier copy in place.
        if (atom.occupancy > atoms[it->second].occupancy) {
          int order = atoms[it->second].file_order;
          atoms[it->second] = atom;
          atoms[it->second].file_order = order;
        }
        continue;
      }
      altloc_index.emplace(std::move(key), atoms.size());
    }
    atoms.push_back(std::move(atom));
  }

  if (!saw_atom_record)
    throw ParseError("PDB", 0, "no ATOM records");

  StructureFile out;
  std::map<char, std::size_t> chain_index;
  // (resname, chain, resseq, icode) -> molecule index.
  std::map<std::string, std::size_t> group_index;

  for (const RawAtom &raw : atoms) {
    Atom atom;
    atom.element = raw.element;
    atom.position = raw.position;
    atom.name = raw.name;
    atom.residue = raw.resname + std::to_string(raw.resseq);
    atom.chain = raw.chain;

    if (!raw.hetatm) {
      auto [it, inserted] = chain_index.try_emplace(raw.chain, out.proteins.size());
      if (inserted) {
        Molecule chain;
        chain.name = std::string("chain ") + raw.chain;
        out.proteins.push_back(std::move(chain));
      }
      out.proteins[it->second].atoms.push_back(std::move(atom));
      continue;
    }

    std::string key = raw.resname + "/" + raw.chain + "/" +
                      std::to_string(raw.resseq) + raw.icode;
    if (is_water(raw.resname)) {
      auto [it, inserted] = group_index.try_emplace("W:" + key, out.waters.size());
      if (inserted) {
        Molecule water;
        water.name = raw.resname + " " + raw.chain + " " + std::to_string(raw.resseq);
        out.waters.push_back(std::move(water));
      }
      out.waters[it->second].atoms.push_back(std::move(atom));
    } else {
      auto [it, inserted] = group_index.try_emplace("L:" + key, out.ligands.size());
      if (inserted) {
        Molecule lig;
        lig.name = raw.resname + " " + raw.chain + " " + std::to_string(raw.resseq);
        out.ligands.push_back(std::move(lig));
      }
      out.ligands[it->second].atoms.push_back(std::move(atom));
    }
  }

  return out;
}

}  // namespace dockaudit
