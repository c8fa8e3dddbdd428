#include "translat/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace translat {

namespace {

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// one-line permutations of {0..n-1} in lexicographic order, matching the
// element order of make_symmetric(n)
std::vector<std::vector<int>> perms_lex(int n) {
  std::vector<int> p = identity_perm(n);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

bool GSet::is_valid() const {
  if (!acting.parent) return false;
  const auto& g = *acting.parent;
  auto elems = acting.member_list();
  if (perms.size() != elems.size()) return false;
  for (const auto& p : perms)
    if (!is_permutation(p, size)) return false;
  for (int a : elems)
    for (int b : elems) {
      int ab = g.mul(a, b);
      if (!acting.contains(ab)) return false;
      const auto &pa = perm_of(a), &pb = perm_of(b), &pab = perm_of(ab);
      for (int x = 0; x < size; ++x)
        if (pab[x] != pa[pb[x]]) return false;
    }
  return true;
}

GSet trivial_gset(const Subgroup& h, int n) {
  GSet a{h, n, {}};
  a.perms.assign(h.order(), identity_perm(n));
  return a;
}

GSet regular_gset(const Subgroup& h) {
  const auto& g = *h.parent;
  auto elems = h.member_list();
  const int n = static_cast<int>(elems.size());
  GSet a{h, n, {}};
  a.perms.reserve(n);
  for (int x : elems) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = mask_rank(h.members, g.mul(x, elems[i]));
    a.perms.push_back(std::move(p));
  }
  return a;
}

GSet coset_gset(const Subgroup& h, const Subgroup& k) {
  if (!h.same_parent(k) || (k.members & ~h.members) != 0)
    throw InputError("coset_gset: K must be a subgroup of H");
  const auto& g = *h.parent;
  // left cosets xK, ordered by least member
  std::vector<ElemMask> cosets;
  ElemMask remaining = h.members;
  while (remaining) {
    int x = std::countr_zero(remaining);
    ElemMask c = 0;
    for (int y : k.member_list()) c |= ElemMask{1} << g.mul(x, y);
    cosets.push_back(c);
    remaining &= ~c;
  }
  const int n = static_cast<int>(cosets.size());
  auto coset_of = [&](int elem) {
    for (int i = 0; i < n; ++i)
      if (cosets[i] >> elem & 1) return i;
    throw InputError("coset_gset: element outside H");
  };
  GSet a{h, n, {}};
  for (int x : h.member_list()) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = coset_of(g.mul(x, std::countr_zero(cosets[i])));
    a.perms.push_back(std::move(p));
  }
  return a;
}

GSet pullback_gset(const Homomorphism& f, const GSet& a) {
  if (f.target.parent.get() != a.acting.parent.get() ||
      (f.target.members & ~a.acting.members) != 0)
    throw InputError("pullback_gset: homomorphism does not land in the acting subgroup");
  GSet out{f.source, a.size, {}};
  for (int x : f.source.member_list()) out.perms.push_back(a.perm_of(f.image_of(x)));
  return out;
}

Homomorphism gset_action_hom(const GSet& a) {
  if (a.size > 4)
    throw CapError("gset_action_hom: Sigma_" + std::to_string(a.size) +
                   " exceeds the order cap");
  auto sym = make_symmetric(a.size);
  auto lex = perms_lex(a.size);
  Homomorphism f{a.acting, full_subgroup(subgroup_lattice(sym)->group), {}};
  for (const auto& p : a.perms) {
    auto it = std::lower_bound(lex.begin(), lex.end(), p);
    f.images.push_back(static_cast<int>(it - lex.begin()));
  }
  return f;
}

GSet gset_from_action_hom(const Homomorphism& phi) {
  const auto& tg = *phi.target.parent;
  if (tg.sym_degree < 0)
    throw InputError("gset_from_action_hom: target is not a symmetric group");
  auto lex = perms_lex(tg.sym_degree);
  GSet a{phi.source, tg.sym_degree, {}};
  for (int v : phi.images) a.perms.push_back(lex[v]);
  return a;
}

std::vector<Orbit> orbits(const GSet& a) {
  auto elems = a.acting.member_list();
  std::vector<char> used(a.size, 0);
  std::vector<Orbit> out;
  for (int p0 = 0; p0 < a.size; ++p0) {
    if (used[p0]) continue;
    std::vector<int> pts;
    ElemMask stab = 0;
    for (int x : elems) {
      int q = a.apply(x, p0);
      if (!used[q]) {
        used[q] = 1;
        pts.push_back(q);
      }
      if (q == p0) stab |= ElemMask{1} << x;
    }
    std::sort(pts.begin(), pts.end());
    out.push_back(Orbit{std::move(pts), Subgroup{a.acting.parent, stab}});
  }
  return out;
}

bool is_admissible_gset(const TransferSystem& t, const GSet& a) {
  const auto& lat = *t.lattice;
  if (a.acting.parent.get() != lat.group.get())
    throw InputError("is_admissible_gset: acting subgroup is outside the lattice");
  int h = lat.index_of_mask(a.acting.members);
  if (h < 0) throw InputError("is_admissible_gset: acting subgroup not in lattice");
  for (const auto& orb : orbits(a)) {
    int k = lat.index_of_mask(orb.stabilizer.members);
    if (!t.admits(k, h)) return false;
  }
  return true;
}

GSet disjoint_union(const GSet& a, const GSet& b) {
  if (!(a.acting == b.acting)) throw InputError("disjoint_union: acting groups differ");
  GSet u{a.acting, a.size + b.size, {}};
  for (std::size_t i = 0; i < a.perms.size(); ++i) {
    std::vector<int> p(u.size);
    for (int x = 0; x < a.size; ++x) p[x] = a.perms[i][x];
    for (int x = 0; x < b.size; ++x) p[a.size + x] = a.size + b.perms[i][x];
    u.perms.push_back(std::move(p));
  }
  return u;
}

std::vector<int> blk(const std::vector<int>& sigma, const std::vector<int>& sizes) {
  const int k = static_cast<int>(sizes.size());
  if (!is_permutation(sigma, k)) throw InputError("blk: sigma is not a permutation of the blocks");
  for (int s : sizes)
    if (s < 0) throw InputError("blk: negative block size");
  std::vector<int> src_off(k, 0), slot_size(k, 0), slot_off(k, 0);
  for (int i = 1; i < k; ++i) src_off[i] = src_off[i - 1] + sizes[i - 1];
  for (int i = 0; i < k; ++i) slot_size[sigma[i]] = sizes[i];
  for (int s = 1; s < k; ++s) slot_off[s] = slot_off[s - 1] + slot_size[s - 1];
  int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<int> out(total);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < sizes[i]; ++j) out[src_off[i] + j] = slot_off[sigma[i]] + j;
  return out;
}

GSet compose_orbits(const LatticePtr& lat, const GSet& big, const GSet& small) {
  const auto& g = *lat->group;
  if (big.acting.parent.get() != lat->group.get() ||
      small.acting.parent.get() != lat->group.get())
    throw InputError("compose_orbits: G-sets are not over the lattice's group");
  if (big.acting.members != full_subgroup(lat->group).members)
    throw InputError("compose_orbits: big must be a G-set for the full group");
  auto big_orbits = orbits(big);
  if (big_orbits.size() != 1)
    throw InputError("compose_orbits: big must be transitive");
  // H = stabilizer of big's point 0; small must be an H-set
  ElemMask h_mask = 0;
  for (int x = 0; x < g.order; ++x)
    if (big.apply(x, 0) == 0) h_mask |= ElemMask{1} << x;
  if (small.acting.members != h_mask)
    throw InputError("compose_orbits: small's acting group is not the stabilizer of "
                     "big's basepoint (non-nested subgroups)");
  const int m = big.size, n = small.size;
  // coset representatives: least g with g(0) = i
  std::vector<int> rep(m, -1);
  for (int x = 0; x < g.order; ++x) {
    int i = big.apply(x, 0);
    if (rep[i] < 0) rep[i] = x;
  }
  GSet out{full_subgroup(lat->group), m * n, {}};
  std::vector<int> equal_sizes(m, n);
  for (int x = 0; x < g.order; ++x) {
    std::vector<int> sigma(m);
    for (int i = 0; i < m; ++i) sigma[i] = big.apply(x, i);
    std::vector<int> block = blk(sigma, equal_sizes);
    std::vector<int> p(m * n);
    for (int i = 0; i < m; ++i) {
      int hx = g.mul(g.inv(rep[sigma[i]]), g.mul(x, rep[i]));
      const auto& tau = small.perm_of(hx);
      for (int j = 0; j < n; ++j) p[i * n + j] = block[i * n + tau[j]];
    }
    out.perms.push_back(std::move(p));
  }
  return out;
}

std::vector<std::pair<int, int>> gset_orbit_signature(const LatticePtr& lat, const GSet& a) {
  if (a.acting.parent.get() != lat->group.get())
    throw InputError("gset_orbit_signature: G-set is not over the lattice's group");
  std::vector<std::pair<int, int>> sig;
  for (const auto& orb : orbits(a)) {
    int s = lat->index_of_mask(orb.stabilizer.members);
    sig.emplace_back(static_cast<int>(orb.points.size()), lat->conjugacy_class[s]);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

bool gset_equivalent(const LatticePtr& lat, const GSet& a, const GSet& b) {
  return a.acting == b.acting && a.size == b.size &&
         gset_orbit_signature(lat, a) == gset_orbit_signature(lat, b);
}

GraphSubgroup graph_of(const GSet& a) {
  if (!a.acting.parent) throw InputError("graph_of: G-set has no parent group");
  auto sym = make_symmetric(a.size);  // CapError when a.size > 4
  auto carrier = make_direct_product(a.acting.parent, sym);
  auto lex = perms_lex(a.size);
  const int nk = sym->order;
  ElemMask members = 0;
  for (int x : a.acting.member_list()) {
    const auto& p = a.perm_of(x);
    int r = static_cast<int>(std::lower_bound(lex.begin(), lex.end(), p) - lex.begin());
    members |= ElemMask{1} << (x * nk + r);
  }
  return GraphSubgroup{carrier, members, a};
}

GraphWitnessResult graph_to_witness(const Subgroup& gamma) {
  const auto& prod = *gamma.parent;
  if (!prod.factor_left || !prod.factor_right || prod.factor_right->sym_degree < 0)
    throw InputError("graph_to_witness: parent is not a product with a symmetric right factor");
  const auto& left = *prod.factor_left;
  const auto& right = *prod.factor_right;
  const int nk = right.order;
  // defining condition: members meeting {e} x Sigma_n only at the identity
  for (int b = 0; b < nk; ++b) {
    if (b == right.identity) continue;
    int e = left.identity * nk + b;
    if (gamma.contains(e)) return GraphWitnessResult{false, {}, e};
  }
  auto lex = perms_lex(right.sym_degree);
  ElemMask h_mask = 0;
  std::map<int, int> phi;  // left element -> right element
  for (int e : gamma.member_list()) {
    int a = e / nk, b = e % nk;
    h_mask |= ElemMask{1} << a;
    phi[a] = b;  // unique since gamma meets {e} x Sigma_n trivially
  }
  GSet witness{Subgroup{prod.factor_left, h_mask}, right.sym_degree, {}};
  for (auto [a, b] : phi) witness.perms.push_back(lex[b]);
  return GraphWitnessResult{true, std::move(witness), -1};
}

bool AdmissibleFamily::contains(int carrier_sub_index) const {
  return std::binary_search(graphs.begin(), graphs.end(), carrier_sub_index);
}

AdmissibleFamily admissible_family(const TransferSystem& t, int n) {
  if (n < 0) throw InputError("admissible_family: negative arity");
  if (n > 4) throw CapError("admissible_family: arity " + std::to_string(n) + " exceeds cap 4");
  const auto& lat = *t.lattice;
  auto carrier = make_direct_product(lat.group, make_symmetric(n));
  AdmissibleFamily fam;
  fam.group = lat.group;
  fam.arity = n;
  fam.carrier_lattice = subgroup_lattice(carrier);
  const auto& clat = *fam.carrier_lattice;
  for (int s = 0; s < clat.size(); ++s) {
    auto w = graph_to_witness(clat.subgroups[s]);
    if (!w.ok) continue;
    // the witness acts through the carrier's left factor, which is lat.group
    if (is_admissible_gset(t, w.witness)) fam.graphs.push_back(s);
  }
  return fam;
}

TransferSystem transfer_of_family(const std::vector<AdmissibleFamily>& fams,
                                  const LatticePtr& lat) {
  if (fams.empty()) throw InputError("transfer_of_family: no families given");
  const int cap = static_cast<int>(fams.size()) - 1;
  for (int n = 0; n <= cap; ++n) {
    if (fams[n].arity != n)
      throw InputError("transfer_of_family: families must be indexed by arity");
    if (fams[n].group.get() != lat->group.get())
      throw InputError("transfer_of_family: family group does not match the lattice");
  }
  // closure invariants of each input family
  for (const auto& fam : fams) {
    const auto& clat = *fam.carrier_lattice;
    const auto& carrier = *clat.group;
    for (int s : fam.graphs) {
      for (int s2 = 0; s2 < clat.size(); ++s2)
        if (clat.leq[s2][s] && !fam.contains(s2))
          throw InputError("transfer_of_family: family not closed under subgroups");
      for (int e = 0; e < carrier.order; ++e)
        if (!fam.contains(clat.conj_map[e][s]))
          throw InputError("transfer_of_family: family not closed under conjugation");
    }
    for (int h = 0; h < lat->size(); ++h) {
      GraphSubgroup triv = graph_of(trivial_gset(lat->subgroups[h], fam.arity));
      int idx = clat.index_of_mask(triv.members);
      if (idx < 0 || !fam.contains(idx))
        throw InputError("transfer_of_family: trivial graph missing from family");
    }
  }
  // read the relation off the coset orbits
  TransferSystem t = empty_system(lat);
  for (int p = 0; p < lat->num_pairs(); ++p) {
    auto [k, h] = lat->pairs[p];
    int index = lat->index_in[h][k];
    if (index > cap) continue;
    GraphSubgroup gk = graph_of(coset_gset(lat->subgroups[h], lat->subgroups[k]));
    int idx = fams[index].carrier_lattice->index_of_mask(gk.members);
    if (idx < 0)
      throw InputError("transfer_of_family: coset graph missing from carrier lattice");
    if (fams[index].contains(idx)) t.edges.set(p);
  }
  // consistency: every family graph's membership must agree with the orbit
  // criterion of the relation just read off (disjoint-union closure)
  for (const auto& fam : fams) {
    for (int s = 0; s < fam.carrier_lattice->size(); ++s) {
      auto w = graph_to_witness(fam.carrier_lattice->subgroups[s]);
      if (!w.ok) continue;
      bool by_orbits = true;
      int hidx = lat->index_of_mask(w.witness.acting.members);
      for (const auto& orb : orbits(w.witness)) {
        int kidx = lat->index_of_mask(orb.stabilizer.members);
        int index = lat->index_in[hidx][kidx];
        if (index > cap) continue;  // not decidable at this cap
        GraphSubgroup og = graph_of(coset_gset(lat->subgroups[hidx], lat->subgroups[kidx]));
        int oi = fams[index].carrier_lattice->index_of_mask(og.members);
        if (!fams[index].contains(oi)) by_orbits = false;
      }
      bool decidable = true;
      for (const auto& orb : orbits(w.witness)) {
        int kidx = lat->index_of_mask(orb.stabilizer.members);
        if (lat->index_in[hidx][kidx] > cap) decidable = false;
      }
      if (decidable && fam.contains(s) != by_orbits)
        throw InputError("transfer_of_family: family contradicts disjoint-union closure");
    }
  }
  // the result is t truncated to pairs of index <= cap, which need not be
  // transitively closed on its own, so no validate() here
  return t;
}

}  // namespace translat
