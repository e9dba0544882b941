//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_FINGERPRINT_HPP
#define DOCKAUDIT_FINGERPRINT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "dockaudit/graph.hpp"

namespace dockaudit {

/// Circular-substructure fingerprint, radius 2, 2048 bits. Width and
/// radius are fixed per build, so width mismatch cannot occur between two
/// Fingerprint values.
///
/// The hashing scheme is pinned so results are reproducible across
/// platforms:
///   mix(z)          = splitmix64 finalizer
///   combine(h, x)   = mix(h ^ mix(x + 0x9e3779b97f4a7c15))
///   id0(v)          = combine-fold over (atomic number, charge + 16,
///                     H count, degree, aromatic) seeded with 0x5d0f
///   idr(v)          = combine-fold over (id(r-1)(v), sorted tokens), with
///                     token(u) = combine(edge class, id(r-1)(u))
/// Every id at radii 0..2 sets bit (id mod 2048).
struct Fingerprint {
  static constexpr int kBits = 2048;
  static constexpr int kRadius = 2;
  static constexpr int kWords = kBits / 64;

  std::array<std::uint64_t, kWords> words{};

  void set(std::uint32_t bit) {
    words[bit / 64] |= std::uint64_t{1} << (bit % 64);
  }
  bool test(std::uint32_t bit) const {
    return (words[bit / 64] >> (bit % 64)) & 1;
  }
  int count() const;
  bool empty() const;

  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;
};

std::uint64_t fp_mix(std::uint64_t z);
std::uint64_t fp_combine(std::uint64_t h, std::uint64_t x);

/// Per-node environment identifiers after `radius` iterations of the
/// scheme above. radius 0 gives the seed invariants.
std::vector<std::uint64_t> atom_environment_ids(const MolGraph &g, int radius);

/// Deterministic and invariant to node input order.
Fingerprint fingerprint(const MolGraph &g);

/// |a AND b| / |a OR b|; 1.0 when both fingerprints are empty.
double tanimoto(const Fingerprint &a, const Fingerprint &b);

}  // namespace dockaudit

#endif  // DOCKAUDIT_FINGERPRINT_HPP
