#pragma once

#include <nlohmann/json.hpp>

#include "translat/family.hpp"
#include "translat/gset.hpp"
#include "translat/poset.hpp"

namespace translat {

using ordered_json = nlohmann::ordered_json;

// All serializers emit canonical JSON: fixed key order, integer values only,
// compact dump. serialize -> parse -> serialize is byte-identical.

ordered_json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const nlohmann::json& j);  // validates the table

ordered_json subgroup_to_json(const Subgroup& s);
Subgroup subgroup_from_json(const nlohmann::json& j, const GroupPtr& parent);

ordered_json transfer_to_json(const TransferSystem& t);
TransferSystem transfer_from_json(const nlohmann::json& j, const LatticePtr& lat);

ordered_json poset_to_json(const TransferPoset& p);
std::string poset_to_dot(const TransferPoset& p);

ordered_json family_system_to_json(const FamilyTransferSystem& s);
FamilyTransferSystem family_system_from_json(const nlohmann::json& j, const FamilyPtr& fam);

ordered_json gset_to_json(const GSet& a);
GSet gset_from_json(const nlohmann::json& j, const LatticePtr& lat);

ordered_json admissible_family_to_json(const AdmissibleFamily& f);

ordered_json hom_witness_to_json(const HomWitness& w, const LatticePtr& lat);

std::string canonical_dump(const ordered_json& j);

}  // namespace translat
