#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <cstdint>
#include <vector>

#include "translat/group.hpp"

namespace oracles {

// Every multiplication-closed identity-containing subset, by scanning the full
// power set. Only usable for tiny groups.
inline std::vector<translat::ElemMask> brute_force_subgroups(const translat::FiniteGroup& g) {
  using translat::ElemMask;
  std::vector<ElemMask> out;
  const int n = g.order;
  for (ElemMask m = 0; m < (ElemMask{1} << n); ++m) {
    if (!(m >> g.identity & 1)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(m >> a & 1)) continue;
      for (int b = 0; b < n && closed; ++b) {
        if (!(m >> b & 1)) continue;
        if (!(m >> g.mul(a, b) & 1)) closed = false;
      }
    }
    if (closed) out.push_back(m);
  }
  return out;
}

// Number of homomorphisms by scanning all |target|^|source| functions.
inline long long brute_force_hom_count(const translat::Subgroup& l,
                                       const translat::Subgroup& h) {
  const auto& gs = *l.parent;
  const auto& gt = *h.parent;
  auto src = l.member_list();
  auto tgt = h.member_list();
  const int ns = static_cast<int>(src.size()), nt = static_cast<int>(tgt.size());
  double total = 1;
  for (int i = 0; i < ns; ++i) total *= nt;
  if (total > 5e7) throw translat::CapError("brute_force_hom_count: too many functions");
  std::vector<int> f(ns, 0);  // odometer over target positions
  std::vector<int> pos_of(gs.order, -1);
  for (int i = 0; i < ns; ++i) pos_of[src[i]] = i;
  long long count = 0;
  for (;;) {
    bool ok = true;
    for (int i = 0; i < ns && ok; ++i)
      for (int j = 0; j < ns && ok; ++j) {
        int ab = gs.mul(src[i], src[j]);
        if (tgt[f[pos_of[ab]]] != gt.mul(tgt[f[i]], tgt[f[j]])) ok = false;
      }
    if (ok) ++count;
    int carry = ns - 1;
    while (carry >= 0 && ++f[carry] == nt) f[carry--] = 0;
    if (carry < 0) break;
  }
  return count;
}

}  // namespace oracles
