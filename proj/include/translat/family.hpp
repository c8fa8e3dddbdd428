#pragma once

#include <optional>

#include "translat/hom_closure.hpp"

namespace translat {

// A finite family of groups: the desk-scale stand-in for the class of all
// compact Lie groups. Members may repeat isomorphism types; labels
// disambiguate. Homomorphism lists between subgroups of (possibly different)
// members are cached lazily, optionally persisted to the on-disk cache.
class GroupFamily {
 public:
  GroupFamily(std::vector<std::string> labels, std::vector<GroupPtr> groups,
              bool use_disk_cache = false);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int m) const { return labels_[m]; }
  const GroupPtr& group(int m) const { return groups_[m]; }
  const LatticePtr& lattice(int m) const { return lattices_[m]; }
  int member_index(const std::string& label) const;  // -1 when absent

  // All homomorphisms from subgroup src_sub of member src to subgroup tgt_sub
  // of member tgt.
  const std::vector<Homomorphism>& homs(int src, int src_sub, int tgt, int tgt_sub) const;

 private:
  std::vector<std::string> labels_;
  std::vector<GroupPtr> groups_;
  std::vector<LatticePtr> lattices_;
  bool use_disk_cache_ = false;

  struct PairTable;  // all subgroup-pair hom lists for one ordered group pair
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<PairTable>> tables_;
  const PairTable& table_for(int src, int tgt) const;
};

using FamilyPtr = std::shared_ptr<const GroupFamily>;

// One transfer system per member, globally pullback-closed when valid.
struct FamilyTransferSystem {
  FamilyPtr family;
  std::vector<TransferSystem> per_member;

  friend bool operator==(const FamilyTransferSystem& a, const FamilyTransferSystem& b);
};

FamilyTransferSystem family_all(const FamilyPtr& fam);
FamilyTransferSystem family_empty(const FamilyPtr& fam);

struct FamilyWitness {
  int src_member = -1, src_sub = -1;  // L <= member M
  int tgt_member = -1, tgt_sub = -1;  // H <= member M'
  int k_sub = -1;
  int preimage_sub = -1;
  Homomorphism theta;
};

struct FamilyValidation {
  bool ok = true;
  std::optional<FamilyWitness> witness;
};

// Checks the global pullback condition across every cross-member
// homomorphism (per-member validity included).
FamilyValidation validate_family(const FamilyTransferSystem& s);

// Restriction to one member.
TransferSystem u_g(const FamilyTransferSystem& s, int member);

// Right adjoint: (K,H) with H <= member M is admissible iff theta^{-1}(K) <=_t L
// for every subgroup L of the source member and every theta: L -> H.
FamilyTransferSystem r_g(const TransferSystem& t, const FamilyPtr& fam, int source_member);

// The R_G admissibility rule for a single pair, usable without building the
// whole family system.
bool rg_pair_admissible(const TransferSystem& t, const FamilyPtr& fam, int source_member,
                        int target_member, int k, int h);

// (u_g(s) ⊆ t) <=> (s ⊆ r_g(t)); a false return signals an implementation bug.
bool check_adjunction(const TransferSystem& t, const FamilyTransferSystem& s,
                      int source_member);

bool family_subsystem(const FamilyTransferSystem& a, const FamilyTransferSystem& b);
FamilyTransferSystem family_meet(const FamilyTransferSystem& a, const FamilyTransferSystem& b);

// True when some injective homomorphism small -> big exists.
bool embeds_into(const GroupPtr& small, const GroupPtr& big);

// r_g(u_g(s, big)) over one or several "big" members that every member embeds
// into; equals s for valid family systems.
FamilyTransferSystem reconstruct(const FamilyTransferSystem& s, int big_member);
FamilyTransferSystem reconstruct(const FamilyTransferSystem& s,
                                 const std::vector<int>& big_members);

}  // namespace translat
