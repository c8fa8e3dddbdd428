#include "translat/hom.hpp"

#include <algorithm>

namespace translat {

bool Homomorphism::is_valid() const {
  const auto& gs = *source.parent;
  const auto& gt = *target.parent;
  auto elems = source.member_list();
  if (images.size() != elems.size()) return false;
  for (int v : images)
    if (v < 0 || v >= gt.order || !target.contains(v)) return false;
  if (image_of(gs.identity) != gt.identity) return false;
  for (int a : elems)
    for (int b : elems) {
      int ab = gs.mul(a, b);
      if (!source.contains(ab)) return false;
      if (image_of(ab) != gt.mul(image_of(a), image_of(b))) return false;
    }
  return true;
}

bool Homomorphism::is_injective() const {
  return mask_size(image_mask()) == source.order();
}

bool Homomorphism::is_surjective() const { return image_mask() == target.members; }

ElemMask Homomorphism::image_mask() const {
  ElemMask m = 0;
  for (int v : images) m |= ElemMask{1} << v;
  return m;
}

std::vector<Homomorphism> enumerate_homomorphisms(const Subgroup& l, const Subgroup& h) {
  if (l.order() > kMaxHomSource)
    throw CapError("enumerate_homomorphisms: source order " + std::to_string(l.order()) +
                   " exceeds cap " + std::to_string(kMaxHomSource));
  const auto& gs = *l.parent;
  const auto& gt = *h.parent;
  auto src = l.member_list();
  auto tgt = h.member_list();
  const int ns = static_cast<int>(src.size());

  auto gens = minimal_generators(gs, l.members);
  const int ng = static_cast<int>(gens.size());

  // BFS words: each source member as a product of generators, identity = empty.
  std::vector<std::vector<int>> word_of(gs.order);  // indexed by parent element
  std::vector<char> seen(gs.order, 0);
  std::vector<int> frontier{gs.identity};
  seen[gs.identity] = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int gi = 0; gi < ng; ++gi) {
        int y = gs.mul(x, gens[gi]);
        if (!seen[y]) {
          seen[y] = 1;
          word_of[y] = word_of[x];
          word_of[y].push_back(gi);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }

  std::vector<Homomorphism> out;
  std::vector<int> choice(ng, 0);  // indices into tgt
  std::vector<int> images(ns);
  auto emit = [&] {
    for (int i = 0; i < ns; ++i) {
      int v = gt.identity;
      for (int gi : word_of[src[i]]) v = gt.mul(v, tgt[choice[gi]]);
      images[i] = v;
    }
    Homomorphism f{l, h, images};
    if (f.is_valid()) out.push_back(f);
  };
  if (ng == 0) {
    emit();
  } else {
    int pos = 0;
    while (pos >= 0) {
      if (pos == ng) {
        emit();
        --pos;
        ++choice[pos];
      } else if (choice[pos] == static_cast<int>(tgt.size())) {
        choice[pos] = 0;
        --pos;
        if (pos >= 0) ++choice[pos];
      } else if (gs.element_order[gens[pos]] %
                     gt.element_order[tgt[choice[pos]]] !=
                 0) {
        ++choice[pos];  // image order must divide generator order
      } else {
        ++pos;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Homomorphism& a, const Homomorphism& b) {
    return a.images < b.images;
  });
  return out;
}

Subgroup preimage_subgroup(const Homomorphism& f, const Subgroup& k) {
  if (k.parent.get() != f.target.parent.get())
    throw InputError("preimage_subgroup: subgroup belongs to a different group");
  if ((k.members & ~f.target.members) != 0)
    throw InputError("preimage_subgroup: subgroup not contained in the target");
  ElemMask m = 0;
  for (int x : f.source.member_list())
    if (k.contains(f.image_of(x))) m |= ElemMask{1} << x;
  return Subgroup{f.source.parent, m};
}

Homomorphism identity_homomorphism(const Subgroup& s) {
  return Homomorphism{s, s, s.member_list()};
}

Homomorphism inclusion_homomorphism(const Subgroup& small, const Subgroup& big) {
  if (small.parent.get() != big.parent.get() || (small.members & ~big.members) != 0)
    throw InputError("inclusion_homomorphism: not a nested pair");
  return Homomorphism{small, big, small.member_list()};
}

Homomorphism compose_homomorphisms(const Homomorphism& outer, const Homomorphism& inner) {
  if (inner.target.parent.get() != outer.source.parent.get() ||
      (inner.image_mask() & ~outer.source.members) != 0)
    throw InputError("compose_homomorphisms: image does not land in the outer source");
  std::vector<int> images;
  images.reserve(inner.images.size());
  for (int v : inner.images) images.push_back(outer.image_of(v));
  return Homomorphism{inner.source, outer.target, std::move(images)};
}

}  // namespace translat
