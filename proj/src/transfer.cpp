#include "translat/transfer.hpp"

namespace translat {

namespace {

void check_shape(const TransferSystem& t) {
  if (!t.lattice) throw InputError("transfer system has no lattice");
  if (t.edges.size() != static_cast<std::size_t>(t.lattice->num_pairs()))
    throw InputError("transfer system bitset does not match the lattice pair list");
}

void check_same_lattice(const TransferSystem& a, const TransferSystem& b) {
  check_shape(a);
  check_shape(b);
  if (a.lattice.get() != b.lattice.get())
    throw InputError("transfer systems belong to different lattices");
}

}  // namespace

std::vector<std::pair<int, int>> TransferSystem::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t p = edges.find_first(); p != EdgeBits::npos; p = edges.find_next(p))
    out.push_back(lattice->pairs[p]);
  return out;
}

TransferSystem empty_system(const LatticePtr& lat) {
  return TransferSystem{lat, EdgeBits(lat->num_pairs())};
}

TransferSystem complete_system(const LatticePtr& lat) {
  EdgeBits e(lat->num_pairs());
  e.set();
  return TransferSystem{lat, std::move(e)};
}

TransferSystem system_from_pairs(const LatticePtr& lat,
                                 const std::vector<std::pair<int, int>>& pairs) {
  TransferSystem t = empty_system(lat);
  for (auto [k, h] : pairs) {
    if (k < 0 || h < 0 || k >= lat->size() || h >= lat->size() ||
        lat->pair_index[k][h] < 0)
      throw InputError("edge (" + std::to_string(k) + "," + std::to_string(h) +
                       ") is not a strict comparable pair");
    t.edges.set(lat->pair_index[k][h]);
  }
  return t;
}

ValidationResult validate(const TransferSystem& t) {
  check_shape(t);
  const auto& lat = *t.lattice;
  const auto& g = *lat.group;
  for (std::size_t p = t.edges.find_first(); p != EdgeBits::npos;
       p = t.edges.find_next(p)) {
    auto [k, h] = lat.pairs[p];
    // transitivity: (k,h), (h,g2) => (k,g2)
    for (std::size_t q = t.edges.find_first(); q != EdgeBits::npos;
         q = t.edges.find_next(q)) {
      auto [k2, g2] = lat.pairs[q];
      if (k2 == h && !t.admits(k, g2))
        return {false, "transitivity", k, h,
                "missing (" + std::to_string(k) + "," + std::to_string(g2) + ")"};
    }
    // restriction: L <= h => (L ^ K, L)
    for (int l = 0; l < lat.size(); ++l) {
      if (!lat.leq[l][h]) continue;
      int m = lat.meet_table[l][k];
      if (m != l && !t.admits(m, l))
        return {false, "restriction", k, h,
                "missing (" + std::to_string(m) + "," + std::to_string(l) + ")"};
    }
    // conjugation
    for (int e = 0; e < g.order; ++e) {
      int ck = lat.conj_map[e][k], ch = lat.conj_map[e][h];
      if (!t.admits(ck, ch))
        return {false, "conjugation", k, h,
                "missing (" + std::to_string(ck) + "," + std::to_string(ch) +
                    ") for conjugation by " + g.elements[e]};
    }
  }
  return {};
}

TransferSystem close(const TransferSystem& seed) {
  check_shape(seed);
  const auto& lat = *seed.lattice;
  const auto& g = *lat.group;
  TransferSystem t = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = t.edges.find_first(); p != EdgeBits::npos;
         p = t.edges.find_next(p)) {
      auto [k, h] = lat.pairs[p];
      for (int e = 0; e < g.order; ++e) {
        int q = lat.pair_index[lat.conj_map[e][k]][lat.conj_map[e][h]];
        if (!t.edges[q]) {
          t.edges.set(q);
          changed = true;
        }
      }
      for (int l = 0; l < lat.size(); ++l) {
        if (!lat.leq[l][h]) continue;
        int m = lat.meet_table[l][k];
        if (m != l && !t.edges[lat.pair_index[m][l]]) {
          t.edges.set(lat.pair_index[m][l]);
          changed = true;
        }
      }
      for (std::size_t q = t.edges.find_first(); q != EdgeBits::npos;
           q = t.edges.find_next(q)) {
        auto [k2, g2] = lat.pairs[q];
        if (k2 == h && k != g2 && !t.edges[lat.pair_index[k][g2]]) {
          t.edges.set(lat.pair_index[k][g2]);
          changed = true;
        }
        if (g2 == k && k2 != h && !t.edges[lat.pair_index[k2][h]]) {
          t.edges.set(lat.pair_index[k2][h]);
          changed = true;
        }
      }
    }
  }
  return t;
}

TransferSystem close(const LatticePtr& lat, const std::vector<std::pair<int, int>>& seed) {
  return close(system_from_pairs(lat, seed));
}

TransferSystem transitive_closure_only(const TransferSystem& t0) {
  check_shape(t0);
  const auto& lat = *t0.lattice;
  TransferSystem t = t0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = t.edges.find_first(); p != EdgeBits::npos;
         p = t.edges.find_next(p))
      for (std::size_t q = t.edges.find_first(); q != EdgeBits::npos;
           q = t.edges.find_next(q)) {
        auto [k, h] = lat.pairs[p];
        auto [h2, g2] = lat.pairs[q];
        if (h2 == h && k != g2 && !t.edges[lat.pair_index[k][g2]]) {
          t.edges.set(lat.pair_index[k][g2]);
          changed = true;
        }
      }
  }
  return t;
}

TransferSystem meet(const TransferSystem& a, const TransferSystem& b) {
  check_same_lattice(a, b);
  return TransferSystem{a.lattice, a.edges & b.edges};
}

TransferSystem join(const TransferSystem& a, const TransferSystem& b) {
  check_same_lattice(a, b);
  return close(TransferSystem{a.lattice, a.edges | b.edges});
}

bool is_subsystem(const TransferSystem& a, const TransferSystem& b) {
  check_same_lattice(a, b);
  return a.edges.is_subset_of(b.edges);
}

bool system_less(const TransferSystem& a, const TransferSystem& b) {
  std::size_t ca = a.edges.count(), cb = b.edges.count();
  if (ca != cb) return ca < cb;
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    if (a.edges[i] != b.edges[i]) return !a.edges[i];
  return false;
}

}  // namespace translat
