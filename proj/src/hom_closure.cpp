#include "translat/hom_closure.hpp"

namespace translat {

HomClosedResult is_hom_closed(const TransferSystem& t, bool check_all_pairs) {
  const auto& lat = *t.lattice;
  for (std::size_t p = t.edges.find_first(); p != EdgeBits::npos;
       p = t.edges.find_next(p)) {
    auto [k, h] = lat.pairs[p];
    for (int l = 0; l < lat.size(); ++l) {
      if (!check_all_pairs && !lat.pair_is_conj_rep(l, h)) continue;
      for (const auto& theta : lat.homs_between(l, h)) {
        Subgroup pre = preimage_subgroup(theta, lat.subgroups[k]);
        int pidx = lat.index_of_mask(pre.members);
        if (!t.admits(pidx, l))
          return {false, HomWitness{l, h, k, pidx, theta}};
      }
    }
  }
  return {};
}

TransferSystem hom_closure(const TransferSystem& t0) {
  TransferSystem t = close(t0);
  const auto& lat = *t.lattice;
  for (;;) {
    EdgeBits add(lat.num_pairs());
    for (std::size_t p = t.edges.find_first(); p != EdgeBits::npos;
         p = t.edges.find_next(p)) {
      auto [k, h] = lat.pairs[p];
      for (int l = 0; l < lat.size(); ++l) {
        if (!lat.pair_is_conj_rep(l, h)) continue;
        for (const auto& theta : lat.homs_between(l, h)) {
          Subgroup pre = preimage_subgroup(theta, lat.subgroups[k]);
          int pidx = lat.index_of_mask(pre.members);
          if (!t.admits(pidx, l)) add.set(lat.pair_index[pidx][l]);
        }
      }
    }
    if (add.none()) return t;
    t.edges |= add;
    t = close(t);
  }
}

TransferPoset filter_hom_closed(const TransferPoset& poset) {
  TransferPoset out;
  out.lattice = poset.lattice;
  for (const auto& t : poset.systems)
    if (is_hom_closed(t).closed) out.systems.push_back(t);
  out.covers = hasse_covers(out.systems);
  return out;
}

TransferPoset enumerate_hom_closed(const LatticePtr& lat, const EnumOptions& opts) {
  return filter_hom_closed(enumerate_transfer_systems(lat, opts));
}

}  // namespace translat
