#include "translat/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace translat {

std::vector<int> mask_elements(ElemMask m) {
  std::vector<int> out;
  out.reserve(mask_size(m));
  while (m) {
    int e = std::countr_zero(m);
    out.push_back(e);
    m &= m - 1;
  }
  return out;
}

namespace {

void check_table(const std::string& name, const std::vector<std::string>& elements,
                 const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw InputError(name + ": group must have at least one element");
  if (n > kMaxOrder)
    throw CapError(name + ": order " + std::to_string(n) + " exceeds cap " +
                   std::to_string(kMaxOrder));
  if (static_cast<int>(table.size()) != n)
    throw InputError(name + ": table has wrong number of rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw InputError(name + ": table has a row of wrong length");
    for (int v : row)
      if (v < 0 || v >= n) throw InputError(name + ": table entry out of range");
  }
  // rows and columns must be permutations
  for (int a = 0; a < n; ++a) {
    ElemMask row = 0, col = 0;
    for (int b = 0; b < n; ++b) {
      row |= ElemMask{1} << table[a][b];
      col |= ElemMask{1} << table[b][a];
    }
    if (mask_size(row) != n || mask_size(col) != n)
      throw InputError(name + ": table is not a Latin square");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InputError(name + ": table is not associative");
}

int find_identity(const std::string& name, const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) return e;
  }
  throw InputError(name + ": table has no two-sided identity");
}

}  // namespace

ElemMask closure_mask(const FiniteGroup& g, ElemMask seed) {
  ElemMask s = seed | (ElemMask{1} << g.identity);
  std::vector<int> work = mask_elements(s);
  std::vector<int> in = work;
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < in.size(); ++i) {
      int b = in[i];
      for (int c : {g.mul(a, b), g.mul(b, a)}) {
        if (!(s >> c & 1)) {
          s |= ElemMask{1} << c;
          in.push_back(c);
          work.push_back(c);
        }
      }
    }
  }
  return s;
}

bool is_subgroup_mask(const FiniteGroup& g, ElemMask m) {
  if (!(m >> g.identity & 1)) return false;
  auto elems = mask_elements(m);
  for (int a : elems)
    for (int b : elems)
      if (!(m >> g.mul(a, b) & 1)) return false;
  return true;
}

std::vector<int> minimal_generators(const FiniteGroup& g, ElemMask members) {
  auto elems = mask_elements(members);
  const ElemMask id_only = ElemMask{1} << g.identity;
  if (members == id_only) return {};
  auto generates = [&](const std::vector<int>& gens) {
    ElemMask seed = id_only;
    for (int x : gens) seed |= ElemMask{1} << x;
    return closure_mask(g, seed) == members;
  };
  for (int x : elems)
    if (x != g.identity && generates({x})) return {x};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (generates({elems[i], elems[j]})) return {elems[i], elems[j]};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      for (std::size_t k = j + 1; k < elems.size(); ++k)
        if (generates({elems[i], elems[j], elems[k]})) return {elems[i], elems[j], elems[k]};
  // greedy fallback for groups needing 4+ generators
  std::vector<int> gens;
  ElemMask have = id_only;
  for (int x : elems) {
    if (!(have >> x & 1)) {
      gens.push_back(x);
      have = closure_mask(g, have | (ElemMask{1} << x));
      if (have == members) break;
    }
  }
  return gens;
}

GroupPtr make_group(std::string name, std::vector<std::string> elements,
                    std::vector<std::vector<int>> table) {
  check_table(name, elements, table);
  auto g = std::make_shared<FiniteGroup>();
  g->name = std::move(name);
  g->order = static_cast<int>(elements.size());
  g->elements = std::move(elements);
  g->table = std::move(table);
  g->identity = find_identity(g->name, g->table);
  g->inverse.resize(g->order);
  for (int a = 0; a < g->order; ++a)
    for (int b = 0; b < g->order; ++b)
      if (g->table[a][b] == g->identity) g->inverse[a] = b;
  g->element_order.resize(g->order);
  for (int a = 0; a < g->order; ++a) {
    int x = a, k = 1;
    while (x != g->identity) {
      x = g->mul(x, a);
      ++k;
    }
    g->element_order[a] = k;
  }
  ElemMask all = g->order == 64 ? ~ElemMask{0} : (ElemMask{1} << g->order) - 1;
  g->generators = minimal_generators(*g, all);
  if (closure_mask(*g, [&] {
        ElemMask m = ElemMask{1} << g->identity;
        for (int x : g->generators) m |= ElemMask{1} << x;
        return m;
      }()) != all)
    throw InputError(g->name + ": generator search failed to generate the group");
  return g;
}

GroupPtr make_cyclic(int n) {
  if (n < 1) throw InputError("make_cyclic: order must be positive");
  if (n > kMaxOrder)
    throw CapError("make_cyclic: order " + std::to_string(n) + " exceeds cap");
  std::vector<std::string> elems(n);
  for (int i = 0; i < n; ++i)
    elems[i] = i == 0 ? "e" : i == 1 ? "a" : "a^" + std::to_string(i);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return make_group("C" + std::to_string(n), std::move(elems), std::move(table));
}

namespace {

std::vector<std::vector<int>> perms_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string one_line(const std::vector<int>& p) {
  if (p.empty()) return "e";
  std::string s;
  for (int x : p) s += static_cast<char>('1' + x);
  return s;
}

}  // namespace

GroupPtr make_symmetric(int n) {
  if (n < 0) throw InputError("make_symmetric: negative degree");
  if (n > 4) throw CapError("make_symmetric: " + std::to_string(n) + "! exceeds cap");
  auto perms = perms_lex(n);
  const int m = static_cast<int>(perms.size());
  std::vector<std::string> elems(m);
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) elems[i] = one_line(perms[i]);
  // product p*q applies q first, then p
  auto rank = [&](const std::vector<int>& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<int> pq(n);
      for (int x = 0; x < n; ++x) pq[x] = perms[i][perms[j][x]];
      table[i][j] = rank(pq);
    }
  auto g = make_group("S" + std::to_string(n), std::move(elems), std::move(table));
  const_cast<FiniteGroup*>(g.get())->sym_degree = n;
  return g;
}

GroupPtr make_quaternion() {
  // elements 1,-1,i,-i,j,-j,k,-k; encode as unit*2 + (sign<0)
  const std::array<std::string, 8> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // unit products over (1,i,j,k): value and sign
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{+1, +1, +1, +1},
                                 {+1, -1, +1, -1},
                                 {+1, -1, -1, +1},
                                 {+1, +1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign[ua][ub];
      table[a][b] = unit[ua][ub] * 2 + (s < 0 ? 1 : 0);
    }
  return make_group("Q8", std::vector<std::string>(names.begin(), names.end()),
                    std::move(table));
}

GroupPtr make_direct_product(const GroupPtr& g, const GroupPtr& h) {
  if (!g || !h) throw InputError("make_direct_product: null operand");
  long long n = static_cast<long long>(g->order) * h->order;
  if (n > kMaxOrder)
    throw CapError("make_direct_product: order " + std::to_string(n) + " exceeds cap");
  const int nh = h->order, total = static_cast<int>(n);
  std::vector<std::string> elems(total);
  std::vector<std::vector<int>> table(total, std::vector<int>(total));
  for (int a = 0; a < total; ++a)
    elems[a] = "(" + g->elements[a / nh] + "," + h->elements[a % nh] + ")";
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b)
      table[a][b] = g->mul(a / nh, b / nh) * nh + h->mul(a % nh, b % nh);
  auto p = make_group(g->name + "x" + h->name, std::move(elems), std::move(table));
  auto* mp = const_cast<FiniteGroup*>(p.get());
  mp->factor_left = g;
  mp->factor_right = h;
  return p;
}

std::string group_key(const FiniteGroup& g) {
  std::ostringstream os;
  os << g.name << '\x1f';
  for (const auto& e : g.elements) os << e << '\x1f';
  for (const auto& row : g.table)
    for (int v : row) os << v << ',';
  return os.str();
}

Subgroup full_subgroup(const GroupPtr& g) {
  ElemMask all = g->order == 64 ? ~ElemMask{0} : (ElemMask{1} << g->order) - 1;
  return Subgroup{g, all};
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  return Subgroup{g, ElemMask{1} << g->identity};
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  const auto& grp = *h.parent;
  if (g < 0 || g >= grp.order) throw InputError("conjugate_subgroup: element out of range");
  ElemMask m = 0;
  for (int x : h.member_list()) m |= ElemMask{1} << grp.conj(g, x);
  return Subgroup{h.parent, m};
}

GroupPtr subgroup_as_group(const Subgroup& s, std::string name) {
  const auto& g = *s.parent;
  auto elems = s.member_list();
  const int n = static_cast<int>(elems.size());
  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) labels[i] = g.elements[elems[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int prod = g.mul(elems[i], elems[j]);
      if (!s.contains(prod))
        throw InputError("subgroup_as_group: member set is not closed");
      table[i][j] = mask_rank(s.members, prod);
    }
  if (name.empty()) name = g.name + "{" + std::to_string(n) + "}";
  return make_group(std::move(name), std::move(labels), std::move(table));
}

}  // namespace translat
