#pragma once

#include "translat/transfer.hpp"

namespace translat {

// I_G (or a subposet of it): systems in canonical order plus Hasse covers.
struct TransferPoset {
  LatticePtr lattice;
  std::vector<TransferSystem> systems;
  std::vector<std::pair<int, int>> covers;  // (i, j) with systems[i] covered by systems[j]

  int find(const TransferSystem& t) const;  // index or -1
};

enum class EnumMode { kAuto, kExhaustive, kClosureBfs };

// Exhaustive mode filters all 2^pairs subsets; past this many comparable
// pairs it falls back to closure-BFS.
inline constexpr int kExhaustivePairCap = 24;

struct EnumOptions {
  EnumMode mode = EnumMode::kAuto;
  std::size_t node_budget = 100000;  // closure-BFS cap; exceeding throws CapError
  bool warn_on_fallback = true;      // stderr note when exhaustive falls back
  bool with_covers = true;
};

TransferPoset enumerate_transfer_systems(const LatticePtr& lat, const EnumOptions& opts = {});

// Covers of an arbitrary antichain-free list of systems (used for subposets).
std::vector<std::pair<int, int>> hasse_covers(const std::vector<TransferSystem>& systems);

}  // namespace translat
