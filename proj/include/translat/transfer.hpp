#pragma once

#include "translat/lattice.hpp"

namespace translat {

// A G-transfer system: a relation on the subgroup lattice refining inclusion,
// closed under transitivity, restriction and conjugation. Only strict pairs
// are stored; reflexive pairs are implicit. Refinement and antisymmetry hold
// by construction (bits index the lattice's strict comparable pairs).
struct TransferSystem {
  LatticePtr lattice;
  EdgeBits edges;

  bool edge(int k, int h) const {
    int p = lattice->pair_index[k][h];
    return p >= 0 && edges[p];
  }
  // reflexive-inclusive admissibility K <=_T H
  bool admits(int k, int h) const { return k == h || edge(k, h); }
  std::vector<std::pair<int, int>> edge_list() const;

  friend bool operator==(const TransferSystem& a, const TransferSystem& b) {
    return a.lattice.get() == b.lattice.get() && a.edges == b.edges;
  }
};

TransferSystem empty_system(const LatticePtr& lat);
TransferSystem complete_system(const LatticePtr& lat);
TransferSystem system_from_pairs(const LatticePtr& lat,
                                 const std::vector<std::pair<int, int>>& pairs);

struct ValidationResult {
  bool ok = true;
  std::string axiom;  // first violated: "transitivity" | "restriction" | "conjugation"
  int witness_k = -1, witness_h = -1;
  std::string detail;
};

// Checks the stored invariants; throws InputError if the bitset does not
// match the lattice's pair list.
ValidationResult validate(const TransferSystem& t);

// Least transfer system containing the seed: fixed point of transitive,
// restriction and conjugation closure.
TransferSystem close(const TransferSystem& seed);
TransferSystem close(const LatticePtr& lat, const std::vector<std::pair<int, int>>& seed);

// Transitive closure alone, without restriction/conjugation closure. Kept
// separate so tests can compare it against close() on joins.
TransferSystem transitive_closure_only(const TransferSystem& t);

TransferSystem meet(const TransferSystem& a, const TransferSystem& b);
TransferSystem join(const TransferSystem& a, const TransferSystem& b);
bool is_subsystem(const TransferSystem& a, const TransferSystem& b);

// Canonical order on systems of one lattice: edge count, then first
// differing pair bit (absent sorts first).
bool system_less(const TransferSystem& a, const TransferSystem& b);

}  // namespace translat
