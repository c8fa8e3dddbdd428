#include "translat/lattice.hpp"

#include <algorithm>
#include <set>

namespace translat {

namespace {

// (order, member list) lexicographic; masks of equal popcount are compared by
// their sorted member indices, not numerically.
bool mask_canonical_less(ElemMask a, ElemMask b) {
  int ca = mask_size(a), cb = mask_size(b);
  if (ca != cb) return ca < cb;
  while (a && b) {
    int ea = std::countr_zero(a), eb = std::countr_zero(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace

int SubgroupLattice::index_of_mask(ElemMask m) const {
  auto it = mask_index.find(m);
  return it == mask_index.end() ? -1 : it->second;
}

const std::vector<Homomorphism>& SubgroupLattice::homs_between(int l, int h) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(l, h);
  auto it = hom_cache_.find(key);
  if (it != hom_cache_.end()) return it->second;
  auto homs = enumerate_homomorphisms(subgroups[l], subgroups[h]);
  return hom_cache_.emplace(key, std::move(homs)).first->second;
}

bool SubgroupLattice::pair_is_conj_rep(int l, int h) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (conj_rep_.empty()) {
    const int n = size();
    conj_rep_.assign(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::pair<int, int> best{a, b};
        for (int g = 0; g < group->order; ++g)
          best = std::min(best, {conj_map[g][a], conj_map[g][b]});
        conj_rep_[a][b] = best == std::make_pair(a, b);
      }
  }
  return conj_rep_[l][h];
}

namespace {

std::shared_ptr<SubgroupLattice> build_lattice(const GroupPtr& g) {
  auto lat = std::make_shared<SubgroupLattice>();
  lat->group = g;
  const int n = g->order;

  // all cyclic subgroups, then close under pairwise joins
  std::set<ElemMask> subs;
  std::vector<ElemMask> cyclic;
  for (int x = 0; x < n; ++x) {
    ElemMask c = closure_mask(*g, ElemMask{1} << x);
    if (subs.insert(c).second) cyclic.push_back(c);
  }
  std::vector<ElemMask> frontier(subs.begin(), subs.end());
  while (!frontier.empty()) {
    std::vector<ElemMask> fresh;
    for (ElemMask a : frontier)
      for (ElemMask c : cyclic) {
        if ((c & ~a) == 0) continue;
        ElemMask j = closure_mask(*g, a | c);
        if (subs.insert(j).second) fresh.push_back(j);
      }
    frontier = std::move(fresh);
  }

  std::vector<ElemMask> masks(subs.begin(), subs.end());
  std::sort(masks.begin(), masks.end(), mask_canonical_less);
  const int k = static_cast<int>(masks.size());
  lat->subgroups.reserve(k);
  for (int i = 0; i < k; ++i) {
    lat->subgroups.push_back(Subgroup{g, masks[i]});
    lat->mask_index[masks[i]] = i;
  }

  lat->leq.assign(k, EdgeBits(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if ((masks[a] & ~masks[b]) == 0) lat->leq[a][b] = true;

  lat->index_in.assign(k, std::vector<int>(k, 0));
  for (int h = 0; h < k; ++h)
    for (int s = 0; s < k; ++s)
      if (lat->leq[s][h])
        lat->index_in[h][s] = lat->subgroups[h].order() / lat->subgroups[s].order();

  lat->pair_index.assign(k, std::vector<int>(k, -1));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && lat->leq[a][b]) {
        lat->pair_index[a][b] = static_cast<int>(lat->pairs.size());
        lat->pairs.emplace_back(a, b);
      }

  lat->conj_map.assign(n, std::vector<int>(k));
  for (int e = 0; e < n; ++e)
    for (int s = 0; s < k; ++s) {
      ElemMask m = conjugate_subgroup(lat->subgroups[s], e).members;
      lat->conj_map[e][s] = lat->mask_index.at(m);
    }

  lat->conjugacy_class.assign(k, -1);
  int next_class = 0;
  for (int s = 0; s < k; ++s) {
    if (lat->conjugacy_class[s] >= 0) continue;
    for (int e = 0; e < n; ++e) lat->conjugacy_class[lat->conj_map[e][s]] = next_class;
    ++next_class;
  }

  lat->meet_table.assign(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      lat->meet_table[a][b] = lat->mask_index.at(masks[a] & masks[b]);

  return lat;
}

}  // namespace

LatticePtr subgroup_lattice(const GroupPtr& g) {
  if (!g) throw InputError("subgroup_lattice: null group");
  static std::mutex reg_mu;
  static std::map<std::string, LatticePtr> registry;
  std::string key = group_key(*g);
  {
    std::lock_guard<std::mutex> lock(reg_mu);
    auto it = registry.find(key);
    if (it != registry.end()) {
      // content-equal groups share one lattice; carry over constructor
      // metadata the interned handle may lack (e.g. the twin was loaded from
      // JSON before the builtin constructor ran)
      auto* interned = const_cast<FiniteGroup*>(it->second->group.get());
      if (interned->sym_degree < 0 && g->sym_degree >= 0)
        interned->sym_degree = g->sym_degree;
      if (!interned->factor_left && g->factor_left) {
        interned->factor_left = g->factor_left;
        interned->factor_right = g->factor_right;
      }
      return it->second;
    }
  }
  LatticePtr lat = build_lattice(g);
  std::lock_guard<std::mutex> lock(reg_mu);
  auto [it, inserted] = registry.emplace(std::move(key), std::move(lat));
  return it->second;
}

}  // namespace translat
