#pragma once

#include <map>
#include <mutex>
#include <utility>

#include <boost/dynamic_bitset.hpp>

#include "translat/hom.hpp"

namespace translat {

using EdgeBits = boost::dynamic_bitset<>;

// The complete subgroup lattice of a group, in canonical order: sorted by
// (order, member index list). Interned per group content, so equal groups
// share one lattice object and lattice identity can be checked by pointer.
class SubgroupLattice {
 public:
  GroupPtr group;
  std::vector<Subgroup> subgroups;
  std::vector<EdgeBits> leq;                 // leq[k][h] <=> subgroups[k] <= subgroups[h]
  std::vector<int> conjugacy_class;          // class ids by first occurrence
  std::vector<std::vector<int>> index_in;    // index_in[h][k] = [H:K] when K <= H, else 0
  std::vector<std::pair<int, int>> pairs;    // strict comparable (k, h), lexicographic
  std::vector<std::vector<int>> pair_index;  // -1 when (k, h) is not a strict pair
  std::vector<std::vector<int>> conj_map;    // conj_map[g][s] = index of g S g^-1
  std::vector<std::vector<int>> meet_table;  // index of the intersection

  int size() const { return static_cast<int>(subgroups.size()); }
  int num_pairs() const { return static_cast<int>(pairs.size()); }
  int index_of_mask(ElemMask m) const;  // -1 when m is not a subgroup

  // All homomorphisms subgroups[l] -> subgroups[h], lazily computed and cached;
  // safe for concurrent readers.
  const std::vector<Homomorphism>& homs_between(int l, int h) const;

  // Whether (l, h) is the lexicographically least pair in its orbit under
  // simultaneous conjugation. Used to cut the hom-closure quantifier down to a
  // transversal when the system is conjugation-closed.
  bool pair_is_conj_rep(int l, int h) const;

  std::map<ElemMask, int> mask_index;

 private:
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::vector<Homomorphism>> hom_cache_;
  mutable std::vector<std::vector<char>> conj_rep_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

// Enumerates all subgroups (closure-BFS over cyclic subgroups and their
// joins), computes inclusion, conjugacy and index data. Cached per group.
LatticePtr subgroup_lattice(const GroupPtr& g);

}  // namespace translat
