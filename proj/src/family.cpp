#include "translat/family.hpp"

#include <algorithm>
#include <set>

#include "translat/cache.hpp"

namespace translat {

struct GroupFamily::PairTable {
  // keyed by (src subgroup index, tgt subgroup index)
  std::map<std::pair<int, int>, std::vector<Homomorphism>> homs;
};

GroupFamily::GroupFamily(std::vector<std::string> labels, std::vector<GroupPtr> groups,
                         bool use_disk_cache)
    : labels_(std::move(labels)), groups_(std::move(groups)),
      use_disk_cache_(use_disk_cache) {
  if (labels_.size() != groups_.size())
    throw InputError("GroupFamily: label/group count mismatch");
  if (labels_.empty()) throw InputError("GroupFamily: empty family");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size())
    throw InputError("GroupFamily: member labels must be pairwise distinct");
  lattices_.reserve(groups_.size());
  for (auto& g : groups_) {
    lattices_.push_back(subgroup_lattice(g));
    g = lattices_.back()->group;  // rebase onto the interned handle
  }
}

int GroupFamily::member_index(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

const GroupFamily::PairTable& GroupFamily::table_for(int src, int tgt) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(src, tgt);
  if (auto it = tables_.find(key); it != tables_.end()) return *it->second;

  const auto& ls = *lattices_[src];
  const auto& lt = *lattices_[tgt];
  auto table = std::make_shared<PairTable>();
  std::string cache_key =
      "family-homs|" + group_key(*groups_[src]) + "|" + group_key(*groups_[tgt]);

  bool loaded = false;
  if (use_disk_cache_) {
    if (auto hit = cache_get(cache_key)) {
      loaded = true;
      try {
        for (const auto& row : hit->at("pairs")) {
          int a = row.at(0).get<int>(), b = row.at(1).get<int>();
          if (a < 0 || a >= ls.size() || b < 0 || b >= lt.size())
            throw InputError("bad cache row");
          std::vector<Homomorphism> homs;
          for (const auto& imgs : row.at(2)) {
            Homomorphism f{ls.subgroups[a], lt.subgroups[b], imgs.get<std::vector<int>>()};
            if (!f.is_valid()) throw InputError("bad cached homomorphism");
            homs.push_back(std::move(f));
          }
          table->homs[{a, b}] = std::move(homs);
        }
        if (table->homs.size() !=
            static_cast<std::size_t>(ls.size()) * static_cast<std::size_t>(lt.size()))
          throw InputError("incomplete cache entry");
      } catch (const std::exception&) {
        table->homs.clear();
        loaded = false;  // recompute; the cache must never change results
      }
    }
  }
  if (!loaded) {
    for (int a = 0; a < ls.size(); ++a)
      for (int b = 0; b < lt.size(); ++b)
        table->homs[{a, b}] = enumerate_homomorphisms(ls.subgroups[a], lt.subgroups[b]);
    if (use_disk_cache_) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [ab, homs] : table->homs) {
        nlohmann::json maps = nlohmann::json::array();
        for (const auto& f : homs) maps.push_back(f.images);
        rows.push_back({ab.first, ab.second, maps});
      }
      cache_put(cache_key, nlohmann::json{{"pairs", rows}});
    }
  }
  return *tables_.emplace(key, std::move(table)).first->second;
}

const std::vector<Homomorphism>& GroupFamily::homs(int src, int src_sub, int tgt,
                                                   int tgt_sub) const {
  if (src < 0 || src >= size() || tgt < 0 || tgt >= size())
    throw InputError("GroupFamily::homs: member index out of range");
  return table_for(src, tgt).homs.at({src_sub, tgt_sub});
}

bool operator==(const FamilyTransferSystem& a, const FamilyTransferSystem& b) {
  if (a.family.get() != b.family.get() || a.per_member.size() != b.per_member.size())
    return false;
  for (std::size_t i = 0; i < a.per_member.size(); ++i)
    if (a.per_member[i].edges != b.per_member[i].edges) return false;
  return true;
}

FamilyTransferSystem family_all(const FamilyPtr& fam) {
  FamilyTransferSystem s{fam, {}};
  for (int m = 0; m < fam->size(); ++m)
    s.per_member.push_back(complete_system(fam->lattice(m)));
  return s;
}

FamilyTransferSystem family_empty(const FamilyPtr& fam) {
  FamilyTransferSystem s{fam, {}};
  for (int m = 0; m < fam->size(); ++m)
    s.per_member.push_back(empty_system(fam->lattice(m)));
  return s;
}

namespace {

void check_family_shape(const FamilyTransferSystem& s) {
  if (!s.family) throw InputError("family system has no family");
  if (static_cast<int>(s.per_member.size()) != s.family->size())
    throw InputError("family system must carry one transfer system per member");
  for (int m = 0; m < s.family->size(); ++m)
    if (s.per_member[m].lattice.get() != s.family->lattice(m).get())
      throw InputError("family system member " + std::to_string(m) +
                       " is bound to the wrong lattice");
}

}  // namespace

FamilyValidation validate_family(const FamilyTransferSystem& s) {
  check_family_shape(s);
  const auto& fam = *s.family;
  for (int m = 0; m < fam.size(); ++m) {
    auto v = validate(s.per_member[m]);
    if (!v.ok)
      throw InputError("family member " + fam.label(m) +
                       " fails the transfer-system axioms: " + v.axiom);
  }
  for (int mt = 0; mt < fam.size(); ++mt) {
    const auto& t_tgt = s.per_member[mt];
    const auto& lat_tgt = *fam.lattice(mt);
    for (std::size_t p = t_tgt.edges.find_first(); p != EdgeBits::npos;
         p = t_tgt.edges.find_next(p)) {
      auto [k, h] = lat_tgt.pairs[p];
      for (int ms = 0; ms < fam.size(); ++ms) {
        const auto& t_src = s.per_member[ms];
        const auto& lat_src = *fam.lattice(ms);
        for (int l = 0; l < lat_src.size(); ++l)
          for (const auto& theta : fam.homs(ms, l, mt, h)) {
            Subgroup pre = preimage_subgroup(theta, lat_tgt.subgroups[k]);
            int pidx = lat_src.index_of_mask(pre.members);
            if (!t_src.admits(pidx, l))
              return {false, FamilyWitness{ms, l, mt, h, k, pidx, theta}};
          }
      }
    }
  }
  return {};
}

TransferSystem u_g(const FamilyTransferSystem& s, int member) {
  check_family_shape(s);
  if (member < 0 || member >= s.family->size())
    throw InputError("u_g: member not in family");
  return s.per_member[member];
}

bool rg_pair_admissible(const TransferSystem& t, const FamilyPtr& fam, int source_member,
                        int target_member, int k, int h) {
  if (source_member < 0 || source_member >= fam->size())
    throw InputError("r_g: source member not in family");
  if (t.lattice.get() != fam->lattice(source_member).get())
    throw InputError("r_g: transfer system is not on the source member's lattice");
  const auto& lat_src = *fam->lattice(source_member);
  const auto& lat_tgt = *fam->lattice(target_member);
  for (int l = 0; l < lat_src.size(); ++l)
    for (const auto& theta : fam->homs(source_member, l, target_member, h)) {
      Subgroup pre = preimage_subgroup(theta, lat_tgt.subgroups[k]);
      int pidx = lat_src.index_of_mask(pre.members);
      if (!t.admits(pidx, l)) return false;
    }
  return true;
}

FamilyTransferSystem r_g(const TransferSystem& t, const FamilyPtr& fam, int source_member) {
  if (source_member < 0 || source_member >= fam->size())
    throw InputError("r_g: source member not in family");
  if (t.lattice.get() != fam->lattice(source_member).get())
    throw InputError("r_g: transfer system is not on the source member's lattice");
  FamilyTransferSystem out{fam, {}};
  for (int m = 0; m < fam->size(); ++m) {
    const auto& lat = *fam->lattice(m);
    TransferSystem tm = empty_system(fam->lattice(m));
    for (int p = 0; p < lat.num_pairs(); ++p) {
      auto [k, h] = lat.pairs[p];
      if (rg_pair_admissible(t, fam, source_member, m, k, h)) tm.edges.set(p);
    }
    out.per_member.push_back(std::move(tm));
  }
  return out;
}

bool check_adjunction(const TransferSystem& t, const FamilyTransferSystem& s,
                      int source_member) {
  bool lhs = is_subsystem(u_g(s, source_member), t);
  bool rhs = family_subsystem(s, r_g(t, s.family, source_member));
  return lhs == rhs;
}

bool family_subsystem(const FamilyTransferSystem& a, const FamilyTransferSystem& b) {
  check_family_shape(a);
  check_family_shape(b);
  if (a.family.get() != b.family.get())
    throw InputError("family systems belong to different families");
  for (int m = 0; m < a.family->size(); ++m)
    if (!a.per_member[m].edges.is_subset_of(b.per_member[m].edges)) return false;
  return true;
}

FamilyTransferSystem family_meet(const FamilyTransferSystem& a,
                                 const FamilyTransferSystem& b) {
  check_family_shape(a);
  check_family_shape(b);
  if (a.family.get() != b.family.get())
    throw InputError("family systems belong to different families");
  FamilyTransferSystem out{a.family, {}};
  for (int m = 0; m < a.family->size(); ++m)
    out.per_member.push_back(meet(a.per_member[m], b.per_member[m]));
  return out;
}

bool embeds_into(const GroupPtr& small, const GroupPtr& big) {
  if (big->order % small->order != 0) return false;
  auto ls = subgroup_lattice(small);
  auto lb = subgroup_lattice(big);
  for (const auto& f :
       enumerate_homomorphisms(full_subgroup(ls->group), full_subgroup(lb->group)))
    if (f.is_injective()) return true;
  return false;
}

FamilyTransferSystem reconstruct(const FamilyTransferSystem& s, int big_member) {
  return reconstruct(s, std::vector<int>{big_member});
}

FamilyTransferSystem reconstruct(const FamilyTransferSystem& s,
                                 const std::vector<int>& big_members) {
  check_family_shape(s);
  if (big_members.empty()) throw InputError("reconstruct: no big member given");
  const auto& fam = *s.family;
  for (int big : big_members) {
    if (big < 0 || big >= fam.size()) throw InputError("reconstruct: big member not in family");
    for (int m = 0; m < fam.size(); ++m)
      if (!embeds_into(fam.group(m), fam.group(big)))
        throw InputError("reconstruct: member " + fam.label(m) +
                         " does not embed into " + fam.label(big));
  }
  std::optional<FamilyTransferSystem> acc;
  for (int big : big_members) {
    auto next = r_g(u_g(s, big), s.family, big);
    acc = acc ? family_meet(*acc, next) : next;
  }
  return *acc;
}

}  // namespace translat
