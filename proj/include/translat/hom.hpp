#pragma once

#include "translat/group.hpp"

namespace translat {

// Sources larger than this make generator-image search unreasonable.
inline constexpr int kMaxHomSource = 48;

// Group homomorphism between subgroups, possibly of different parent groups.
// images[i] is the element index (in target.parent) of the image of the i-th
// member of source, in ascending member order.
struct Homomorphism {
  Subgroup source;
  Subgroup target;
  std::vector<int> images;

  int image_of(int src_elem) const {
    return images[mask_rank(source.members, src_elem)];
  }
  bool is_valid() const;
  bool is_injective() const;
  bool is_surjective() const;
  ElemMask image_mask() const;
};

// The complete set of homomorphisms source -> target, in canonical order
// (lexicographic by image table). Generator images are pruned by element-order
// divisibility, extended via BFS generator words, and verified on all pairs.
std::vector<Homomorphism> enumerate_homomorphisms(const Subgroup& l, const Subgroup& h);

// {x in f.source : f(x) in k}; k must be a subgroup of f's target parent with
// k.members contained in f.target.members.
Subgroup preimage_subgroup(const Homomorphism& f, const Subgroup& k);

Homomorphism identity_homomorphism(const Subgroup& s);
Homomorphism inclusion_homomorphism(const Subgroup& small, const Subgroup& big);
Homomorphism compose_homomorphisms(const Homomorphism& outer, const Homomorphism& inner);

}  // namespace translat
