#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace translat {

// Every group is stored as a full Cayley table and element subsets are
// uint64 bitmasks, hence the hard cap.
inline constexpr int kMaxOrder = 64;

// Malformed or inconsistent input (CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Size or resource cap exceeded (CLI exit code 3).
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Subset of the elements of one group, one bit per element index.
using ElemMask = std::uint64_t;

inline int mask_size(ElemMask m) { return std::popcount(m); }

std::vector<int> mask_elements(ElemMask m);

// Rank of element e among the set bits of m (e must be set in m).
inline int mask_rank(ElemMask m, int e) {
  return std::popcount(m & ((ElemMask{1} << e) - 1));
}

struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  int identity = 0;
  std::vector<int> generators;  // minimal-size generating set, canonical choice
  std::vector<int> inverse;
  std::vector<int> element_order;

  // Metadata used by the G-set bridge; unset for plain groups.
  int sym_degree = -1;  // n when this group is make_symmetric(n)
  std::shared_ptr<const FiniteGroup> factor_left, factor_right;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Validates the table exhaustively (associativity, identity, inverses,
// Latin-square rows/columns) and fills in the derived fields.
GroupPtr make_group(std::string name, std::vector<std::string> elements,
                    std::vector<std::vector<int>> table);

GroupPtr make_cyclic(int n);
GroupPtr make_symmetric(int n);  // 0 <= n <= 4, since n! must stay under the cap
GroupPtr make_quaternion();
GroupPtr make_direct_product(const GroupPtr& g, const GroupPtr& h);

// Stable content key (name, labels, table) used for lattice interning and the
// on-disk cache.
std::string group_key(const FiniteGroup& g);

// Closure of seed (plus the identity) under multiplication.
ElemMask closure_mask(const FiniteGroup& g, ElemMask seed);
bool is_subgroup_mask(const FiniteGroup& g, ElemMask m);

// Minimal-size generating set of the subgroup given by members; exact for up
// to 3 generators, greedy beyond.
std::vector<int> minimal_generators(const FiniteGroup& g, ElemMask members);

struct Subgroup {
  GroupPtr parent;
  ElemMask members = 0;

  int order() const { return mask_size(members); }
  bool contains(int e) const { return members >> e & 1; }
  std::vector<int> member_list() const { return mask_elements(members); }
  bool same_parent(const Subgroup& o) const { return parent.get() == o.parent.get(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent.get() == b.parent.get() && a.members == b.members;
  }
};

Subgroup full_subgroup(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);

// The subgroup g H g^{-1} of the same parent.
Subgroup conjugate_subgroup(const Subgroup& h, int g);

// Re-indexes the members of s as a group in its own right (0..|s|-1 in
// ascending member order).
GroupPtr subgroup_as_group(const Subgroup& s, std::string name = {});

}  // namespace translat
