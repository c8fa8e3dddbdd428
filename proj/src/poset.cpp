#include "translat/poset.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <thread>

namespace translat {

int TransferPoset::find(const TransferSystem& t) const {
  for (std::size_t i = 0; i < systems.size(); ++i)
    if (systems[i].edges == t.edges) return static_cast<int>(i);
  return -1;
}

std::vector<std::pair<int, int>> hasse_covers(const std::vector<TransferSystem>& systems) {
  const int n = static_cast<int>(systems.size());
  if (n > 20000)
    throw CapError("hasse_covers: poset with " + std::to_string(n) +
                   " systems exceeds the cover-computation cap");
  std::vector<EdgeBits> below(n, EdgeBits(n));  // below[j][i] <=> systems[i] < systems[j]
  std::vector<EdgeBits> above(n, EdgeBits(n));  // above[i][j] <=> systems[i] < systems[j]
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && systems[i].edges.is_proper_subset_of(systems[j].edges)) {
        above[i][j] = true;
        below[j][i] = true;
      }
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (std::size_t j = above[i].find_first(); j != EdgeBits::npos;
         j = above[i].find_next(j))
      if (!(above[i] & below[j]).any()) covers.emplace_back(i, static_cast<int>(j));
  std::sort(covers.begin(), covers.end());
  return covers;
}

namespace {

// Exhaustive mode, pairs <= kExhaustivePairCap: subsets as 32-bit masks with
// precomputed closure demands per pair.
std::vector<TransferSystem> enumerate_exhaustive(const LatticePtr& lat) {
  const auto& l = *lat;
  const int np = l.num_pairs();
  const auto& g = *l.group;
  std::vector<std::uint32_t> req(np, 0);
  std::vector<std::vector<std::pair<int, int>>> trans(np);  // (chained pair, implied pair)
  for (int p = 0; p < np; ++p) {
    auto [k, h] = l.pairs[p];
    for (int e = 0; e < g.order; ++e)
      req[p] |= std::uint32_t{1} << l.pair_index[l.conj_map[e][k]][l.conj_map[e][h]];
    for (int s = 0; s < l.size(); ++s) {
      if (!l.leq[s][h]) continue;
      int m = l.meet_table[s][k];
      if (m != s) req[p] |= std::uint32_t{1} << l.pair_index[m][s];
    }
    for (int q = 0; q < np; ++q) {
      auto [k2, g2] = l.pairs[q];
      if (k2 == h) trans[p].emplace_back(q, l.pair_index[k][g2]);
    }
  }
  auto closed = [&](std::uint32_t mask) {
    for (std::uint32_t m = mask; m; m &= m - 1) {
      int p = std::countr_zero(m);
      if (req[p] & ~mask) return false;
      for (auto [q, r] : trans[p])
        if ((mask >> q & 1) && !(mask >> r & 1)) return false;
    }
    return true;
  };

  // partition the subset space across workers; chunks are concatenated in
  // worker order, so the result is deterministic
  const std::uint64_t total = std::uint64_t{1} << np;
  unsigned workers = 1;
  if (np >= 16)
    workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  std::vector<std::vector<std::uint32_t>> found(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  auto scan = [&](unsigned w) {
    std::uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
    for (std::uint64_t mask = lo; mask < hi; ++mask)
      if (closed(static_cast<std::uint32_t>(mask)))
        found[w].push_back(static_cast<std::uint32_t>(mask));
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& th : pool) th.join();
  }

  std::vector<TransferSystem> out;
  for (const auto& part : found)
    for (std::uint32_t mask : part) {
      EdgeBits bits(np);
      for (int p = 0; p < np; ++p)
        if (mask >> p & 1) bits.set(p);
      out.push_back(TransferSystem{lat, std::move(bits)});
    }
  return out;
}

std::vector<TransferSystem> enumerate_bfs(const LatticePtr& lat, std::size_t budget) {
  std::set<EdgeBits> seen;
  std::vector<TransferSystem> frontier{close(empty_system(lat))};
  seen.insert(frontier.front().edges);
  std::vector<TransferSystem> out;
  while (!frontier.empty()) {
    std::vector<TransferSystem> next;
    for (auto& t : frontier) {
      out.push_back(t);
      for (int p = 0; p < lat->num_pairs(); ++p) {
        if (t.edges[p]) continue;
        TransferSystem u = t;
        u.edges.set(p);
        u = close(u);
        if (seen.insert(u.edges).second) {
          if (seen.size() > budget)
            throw CapError("enumerate_transfer_systems: closure-BFS exceeded node budget of " +
                           std::to_string(budget));
          next.push_back(std::move(u));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TransferPoset enumerate_transfer_systems(const LatticePtr& lat, const EnumOptions& opts) {
  if (!lat) throw InputError("enumerate_transfer_systems: null lattice");
  EnumMode mode = opts.mode;
  if (mode == EnumMode::kAuto)
    mode = lat->num_pairs() <= kExhaustivePairCap ? EnumMode::kExhaustive
                                                  : EnumMode::kClosureBfs;
  else if (mode == EnumMode::kExhaustive && lat->num_pairs() > kExhaustivePairCap) {
    if (opts.warn_on_fallback)
      std::cerr << "warning: " << lat->num_pairs() << " comparable pairs exceed exhaustive cap "
                << kExhaustivePairCap << ", falling back to closure-BFS\n";
    mode = EnumMode::kClosureBfs;
  }
  TransferPoset poset;
  poset.lattice = lat;
  poset.systems = mode == EnumMode::kExhaustive ? enumerate_exhaustive(lat)
                                                : enumerate_bfs(lat, opts.node_budget);
  std::sort(poset.systems.begin(), poset.systems.end(), system_less);
  if (opts.with_covers) poset.covers = hasse_covers(poset.systems);
  return poset;
}

}  // namespace translat
