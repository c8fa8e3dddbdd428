#include "translat/json_io.hpp"

#include <sstream>

namespace translat {

std::string canonical_dump(const ordered_json& j) { return j.dump(); }

ordered_json group_to_json(const FiniteGroup& g) {
  return ordered_json{{"name", g.name},
                      {"order", g.order},
                      {"elements", g.elements},
                      {"table", g.table}};
}

GroupPtr group_from_json(const nlohmann::json& j) {
  try {
    auto name = j.at("name").get<std::string>();
    auto order = j.at("order").get<int>();
    auto elements = j.at("elements").get<std::vector<std::string>>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (order != static_cast<int>(elements.size()))
      throw InputError("group JSON: order field does not match element count");
    return make_group(std::move(name), std::move(elements), std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("group JSON: ") + e.what());
  }
}

ordered_json subgroup_to_json(const Subgroup& s) {
  return ordered_json(s.member_list());
}

Subgroup subgroup_from_json(const nlohmann::json& j, const GroupPtr& parent) {
  std::vector<int> idx;
  try {
    idx = j.get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("subgroup JSON: ") + e.what());
  }
  ElemMask m = 0;
  for (int e : idx) {
    if (e < 0 || e >= parent->order) throw InputError("subgroup JSON: element out of range");
    m |= ElemMask{1} << e;
  }
  if (!is_subgroup_mask(*parent, m))
    throw InputError("subgroup JSON: set is not closed under multiplication");
  return Subgroup{parent, m};
}

namespace {

ordered_json edges_json(const TransferSystem& t) {
  ordered_json edges = ordered_json::array();
  for (auto [k, h] : t.edge_list()) edges.push_back({k, h});
  return edges;
}

EdgeBits edges_from_json(const nlohmann::json& j, const LatticePtr& lat) {
  EdgeBits bits(lat->num_pairs());
  if (!j.is_array()) throw InputError("transfer JSON: edges must be an array");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw InputError("transfer JSON: each edge must be a pair");
    int k = e[0].get<int>(), h = e[1].get<int>();
    if (k < 0 || h < 0 || k >= lat->size() || h >= lat->size())
      throw InputError("transfer JSON: subgroup index out of range");
    int p = lat->pair_index[k][h];
    if (p < 0)
      throw InputError("transfer JSON: (" + std::to_string(k) + "," + std::to_string(h) +
                       ") is not a strict comparable pair");
    bits.set(p);
  }
  return bits;
}

}  // namespace

ordered_json transfer_to_json(const TransferSystem& t) {
  return ordered_json{{"group", t.lattice->group->name}, {"edges", edges_json(t)}};
}

TransferSystem transfer_from_json(const nlohmann::json& j, const LatticePtr& lat) {
  try {
    if (j.contains("group") && j.at("group").get<std::string>() != lat->group->name)
      throw InputError("transfer JSON: group name does not match");
    return TransferSystem{lat, edges_from_json(j.at("edges"), lat)};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("transfer JSON: ") + e.what());
  }
}

ordered_json poset_to_json(const TransferPoset& p) {
  ordered_json systems = ordered_json::array();
  for (const auto& t : p.systems) systems.push_back(edges_json(t));
  ordered_json covers = ordered_json::array();
  for (auto [i, j] : p.covers) covers.push_back({i, j});
  return ordered_json{{"systems", systems}, {"covers", covers}};
}

std::string poset_to_dot(const TransferPoset& p) {
  std::ostringstream os;
  os << "digraph transfer_poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.systems.size(); ++i) {
    os << "  n" << i << " [label=\"{";
    bool first = true;
    for (auto [k, h] : p.systems[i].edge_list()) {
      if (!first) os << ",";
      os << "(" << k << "," << h << ")";
      first = false;
    }
    os << "}\"];\n";
  }
  for (auto [i, j] : p.covers) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

ordered_json family_system_to_json(const FamilyTransferSystem& s) {
  ordered_json names = ordered_json::array();
  for (int m = 0; m < s.family->size(); ++m) names.push_back(s.family->label(m));
  ordered_json systems = ordered_json::object();
  for (int m = 0; m < s.family->size(); ++m)
    systems[s.family->label(m)] = edges_json(s.per_member[m]);
  return ordered_json{{"family", names}, {"systems", systems}};
}

FamilyTransferSystem family_system_from_json(const nlohmann::json& j, const FamilyPtr& fam) {
  try {
    auto names = j.at("family").get<std::vector<std::string>>();
    if (static_cast<int>(names.size()) != fam->size())
      throw InputError("family JSON: member count does not match the family");
    for (int m = 0; m < fam->size(); ++m)
      if (names[m] != fam->label(m))
        throw InputError("family JSON: member labels do not match the family");
    FamilyTransferSystem s{fam, {}};
    for (int m = 0; m < fam->size(); ++m)
      s.per_member.push_back(TransferSystem{
          fam->lattice(m),
          edges_from_json(j.at("systems").at(fam->label(m)), fam->lattice(m))});
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("family JSON: ") + e.what());
  }
}

ordered_json gset_to_json(const GSet& a) {
  return ordered_json{{"group", a.acting.parent->name},
                      {"subgroup", a.acting.member_list()},
                      {"size", a.size},
                      {"images", a.perms}};
}

GSet gset_from_json(const nlohmann::json& j, const LatticePtr& lat) {
  try {
    if (j.at("group").get<std::string>() != lat->group->name)
      throw InputError("gset JSON: group name does not match");
    Subgroup acting = subgroup_from_json(j.at("subgroup"), lat->group);
    GSet a{acting, j.at("size").get<int>(),
           j.at("images").get<std::vector<std::vector<int>>>()};
    if (!a.is_valid()) throw InputError("gset JSON: images do not define an action");
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("gset JSON: ") + e.what());
  }
}

ordered_json admissible_family_to_json(const AdmissibleFamily& f) {
  ordered_json graphs = ordered_json::array();
  for (int s : f.graphs) {
    auto w = graph_to_witness(f.carrier_lattice->subgroups[s]);
    graphs.push_back(ordered_json{{"subgroup", w.witness.acting.member_list()},
                                  {"images", w.witness.perms}});
  }
  return ordered_json{{"group", f.group->name}, {"arity", f.arity}, {"graphs", graphs}};
}

ordered_json hom_witness_to_json(const HomWitness& w, const LatticePtr&) {
  ordered_json theta = ordered_json::array();
  auto members = w.theta.source.member_list();
  for (std::size_t i = 0; i < members.size(); ++i)
    theta.push_back({members[i], w.theta.images[i]});
  return ordered_json{{"source", w.source_sub},
                      {"target", w.target_sub},
                      {"k", w.k_sub},
                      {"theta", theta},
                      {"preimage", w.preimage_sub}};
}

}  // namespace translat
