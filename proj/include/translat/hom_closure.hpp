#pragma once

#include <optional>

#include "translat/poset.hpp"

namespace translat {

// Counterexample to closure under arbitrary homomorphisms: theta: L -> H with
// K <=_t H but theta^{-1}(K) not <=_t L.
struct HomWitness {
  int source_sub = -1;  // L
  int target_sub = -1;  // H
  int k_sub = -1;       // K
  int preimage_sub = -1;
  Homomorphism theta;
};

struct HomClosedResult {
  bool closed = true;
  std::optional<HomWitness> witness;
};

// True iff for all subgroups L, H and every theta: L -> H, K <=_t H implies
// theta^{-1}(K) <=_t L. When quantifying over a transversal of conjugation
// orbits (valid because t is conjugation-closed), check_all_pairs=false; the
// flag exists to cross-check the optimization.
HomClosedResult is_hom_closed(const TransferSystem& t, bool check_all_pairs = false);

// Least hom-closed transfer system containing t.
TransferSystem hom_closure(const TransferSystem& t);

// The subposet of hom-closed systems, with its own covers.
TransferPoset enumerate_hom_closed(const LatticePtr& lat, const EnumOptions& opts = {});
TransferPoset filter_hom_closed(const TransferPoset& poset);

}  // namespace translat
