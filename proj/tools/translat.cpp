#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "translat/cache.hpp"
#include "translat/json_io.hpp"
#include "translat/verify.hpp"

namespace {

using namespace translat;

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw InputError("'" + path + "' is not valid JSON");
  return j;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << text;
  }
}

EnumMode parse_mode(const std::string& mode) {
  if (mode == "auto") return EnumMode::kAuto;
  if (mode == "exhaustive") return EnumMode::kExhaustive;
  if (mode == "bfs") return EnumMode::kClosureBfs;
  throw InputError("unknown mode '" + mode + "'");
}

// Round-trips the poset through the cache; falls back to recomputing if the
// cached shape is off in any way.
TransferPoset enumerate_cached(const LatticePtr& lat, const EnumOptions& opts,
                               bool global_closed) {
  std::string key = canonical_dump(group_to_json(*lat->group)) + "|enumerate|" +
                    (global_closed ? "hom-closed" : "all");
  if (auto hit = cache_get(key)) {
    try {
      TransferPoset poset;
      poset.lattice = lat;
      for (const auto& edges : hit->at("systems"))
        poset.systems.push_back(transfer_from_json(nlohmann::json{{"edges", edges}}, lat));
      for (const auto& c : hit->at("covers")) {
        int i = c.at(0).get<int>(), j = c.at(1).get<int>();
        if (i < 0 || j < 0 || i >= static_cast<int>(poset.systems.size()) ||
            j >= static_cast<int>(poset.systems.size()))
          throw InputError("bad cover");
        poset.covers.emplace_back(i, j);
      }
      return poset;
    } catch (const std::exception&) {
      // fall through to recompute
    }
  }
  TransferPoset poset = global_closed ? enumerate_hom_closed(lat, opts)
                                      : enumerate_transfer_systems(lat, opts);
  cache_put(key, nlohmann::json::parse(canonical_dump(poset_to_json(poset))));
  return poset;
}

int run(int argc, char** argv) {
  CLI::App app{"transfer systems over finite groups: enumeration, closure, adjunction"};
  app.require_subcommand(1);
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "bypass the on-disk computation cache");

  std::string spec, out_path, format = "json", mode = "auto";
  std::string t1_path, t2_path, source, target, big;
  std::vector<std::string> members;
  bool global_closed = false, check_only = false;
  int sub_idx = -1, sup_idx = -1;
  std::size_t budget = 100000;
  std::string rg_target;

  auto* cmd_group = app.add_subcommand("group", "print a group as JSON");
  cmd_group->add_option("spec", spec)->required();
  cmd_group->add_option("-o,--output", out_path);

  auto* cmd_lattice = app.add_subcommand("lattice", "print the subgroup lattice");
  cmd_lattice->add_option("spec", spec)->required();

  auto* cmd_enum = app.add_subcommand("enumerate", "enumerate I_G or its hom-closed subposet");
  cmd_enum->add_option("spec", spec)->required();
  cmd_enum->add_flag("--global-closed", global_closed,
                     "only systems closed under arbitrary homomorphisms");
  cmd_enum->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "count"}));
  cmd_enum->add_option("--mode", mode)->check(CLI::IsMember({"auto", "exhaustive", "bfs"}));
  cmd_enum->add_option("--budget", budget, "closure-BFS node budget");

  auto* cmd_meet = app.add_subcommand("meet", "edge-wise intersection of two systems");
  cmd_meet->add_option("spec", spec)->required();
  cmd_meet->add_option("t1", t1_path)->required();
  cmd_meet->add_option("t2", t2_path)->required();

  auto* cmd_join = app.add_subcommand("join", "closure of the union of two systems");
  cmd_join->add_option("spec", spec)->required();
  cmd_join->add_option("t1", t1_path)->required();
  cmd_join->add_option("t2", t2_path)->required();

  auto* cmd_close = app.add_subcommand("closure", "close a seed edge set");
  cmd_close->add_option("spec", spec)->required();
  cmd_close->add_option("seed", t1_path)->required();

  auto* cmd_hc = app.add_subcommand("hom-closure",
                                    "close a system under arbitrary homomorphisms");
  cmd_hc->add_option("spec", spec)->required();
  cmd_hc->add_option("transfer", t1_path)->required();
  cmd_hc->add_flag("--check", check_only, "only test closedness; print a witness on failure");

  auto* cmd_family = app.add_subcommand("family", "family transfer system operations");
  cmd_family->require_subcommand(1);
  auto* fam_validate = cmd_family->add_subcommand("validate", "check the pullback condition");
  fam_validate->add_option("family", t1_path)->required();
  auto* fam_rg = cmd_family->add_subcommand("rg", "extend a member system to the family");
  fam_rg->add_option("transfer", t1_path)->required();
  fam_rg->add_option("--source", source)->required();
  fam_rg->add_option("--members", members)->required()->delimiter(',');
  auto* fam_ug = cmd_family->add_subcommand("ug", "restrict a family system to a member");
  fam_ug->add_option("family", t1_path)->required();
  fam_ug->add_option("--target", target)->required();
  auto* fam_recon = cmd_family->add_subcommand("reconstruct",
                                               "r_g(u_g(s)) through a big member");
  fam_recon->add_option("family", t1_path)->required();
  fam_recon->add_option("--big", big)->required();

  auto* cmd_query = app.add_subcommand("query", "admissibility of one pair");
  cmd_query->add_option("spec", spec)->required();
  cmd_query->add_option("transfer", t1_path)->required();
  cmd_query->add_option("--sub", sub_idx)->required();
  cmd_query->add_option("--sup", sup_idx)->required();
  cmd_query->add_option("--rg-target", rg_target,
                        "evaluate the R_G rule for the pair inside this member");

  auto* cmd_verify = app.add_subcommand("verify", "run a named acceptance suite");
  cmd_verify->add_option("suite", spec)->required();

  auto* cmd_export = app.add_subcommand("export", "write the Hasse diagram as DOT");
  cmd_export->add_option("spec", spec)->required();
  cmd_export->add_flag("--global-closed", global_closed);
  cmd_export->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (no_cache) set_cache_enabled(false);

  auto family_from_json = [&](const nlohmann::json& j) {
    std::vector<std::string> labels;
    try {
      labels = j.at("family").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("family JSON: ") + e.what());
    }
    return make_family(labels, cache_enabled());
  };

  if (cmd_group->parsed()) {
    write_output(canonical_dump(group_to_json(*parse_group_spec(spec))), out_path);
  } else if (cmd_lattice->parsed()) {
    auto lat = subgroup_lattice(parse_group_spec(spec));
    ordered_json subs = ordered_json::array();
    for (const auto& s : lat->subgroups) subs.push_back(s.member_list());
    ordered_json pairs = ordered_json::array();
    for (auto [k, h] : lat->pairs) pairs.push_back({k, h});
    std::cout << canonical_dump(ordered_json{{"group", lat->group->name},
                                             {"subgroups", subs},
                                             {"conjugacy_class", lat->conjugacy_class},
                                             {"pairs", pairs}})
              << "\n";
  } else if (cmd_enum->parsed()) {
    auto lat = subgroup_lattice(parse_group_spec(spec));
    EnumOptions opts{parse_mode(mode), budget};
    auto poset = enumerate_cached(lat, opts, global_closed);
    if (format == "count")
      std::cout << poset.systems.size() << "\n";
    else if (format == "dot")
      std::cout << poset_to_dot(poset);
    else
      std::cout << canonical_dump(poset_to_json(poset)) << "\n";
  } else if (cmd_meet->parsed() || cmd_join->parsed()) {
    auto lat = subgroup_lattice(parse_group_spec(spec));
    auto a = transfer_from_json(read_json_file(t1_path), lat);
    auto b = transfer_from_json(read_json_file(t2_path), lat);
    auto r = cmd_meet->parsed() ? meet(a, b) : join(a, b);
    std::cout << canonical_dump(transfer_to_json(r)) << "\n";
  } else if (cmd_close->parsed()) {
    auto lat = subgroup_lattice(parse_group_spec(spec));
    auto seed = transfer_from_json(read_json_file(t1_path), lat);
    std::cout << canonical_dump(transfer_to_json(close(seed))) << "\n";
  } else if (cmd_hc->parsed()) {
    auto lat = subgroup_lattice(parse_group_spec(spec));
    auto t = transfer_from_json(read_json_file(t1_path), lat);
    auto v = validate(t);
    if (!v.ok) throw InputError("input fails the transfer-system axioms: " + v.axiom);
    if (check_only) {
      auto r = is_hom_closed(t);
      ordered_json j{{"closed", r.closed}};
      if (!r.closed) j["witness"] = hom_witness_to_json(*r.witness, lat);
      std::cout << canonical_dump(j) << "\n";
      return r.closed ? 0 : 1;
    }
    std::cout << canonical_dump(transfer_to_json(hom_closure(t))) << "\n";
  } else if (fam_validate->parsed()) {
    auto j = read_json_file(t1_path);
    auto fam = family_from_json(j);
    auto s = family_system_from_json(j, fam);
    auto r = validate_family(s);
    ordered_json out{{"valid", r.ok}};
    if (!r.ok) {
      const auto& w = *r.witness;
      out["witness"] = ordered_json{{"source_member", fam->label(w.src_member)},
                                    {"source_sub", w.src_sub},
                                    {"target_member", fam->label(w.tgt_member)},
                                    {"target_sub", w.tgt_sub},
                                    {"k", w.k_sub},
                                    {"preimage", w.preimage_sub}};
    }
    std::cout << canonical_dump(out) << "\n";
    return r.ok ? 0 : 1;
  } else if (fam_rg->parsed()) {
    auto fam = make_family(members, cache_enabled());
    int src = fam->member_index(source);
    if (src < 0) throw InputError("source member '" + source + "' not in family");
    auto t = transfer_from_json(read_json_file(t1_path), fam->lattice(src));
    std::cout << canonical_dump(family_system_to_json(r_g(t, fam, src))) << "\n";
  } else if (fam_ug->parsed()) {
    auto j = read_json_file(t1_path);
    auto fam = family_from_json(j);
    auto s = family_system_from_json(j, fam);
    int tgt = fam->member_index(target);
    if (tgt < 0) throw InputError("target member '" + target + "' not in family");
    std::cout << canonical_dump(transfer_to_json(u_g(s, tgt))) << "\n";
  } else if (fam_recon->parsed()) {
    auto j = read_json_file(t1_path);
    auto fam = family_from_json(j);
    auto s = family_system_from_json(j, fam);
    int b = fam->member_index(big);
    if (b < 0) throw InputError("big member '" + big + "' not in family");
    std::cout << canonical_dump(family_system_to_json(reconstruct(s, b))) << "\n";
  } else if (cmd_query->parsed()) {
    auto g = parse_group_spec(spec);
    auto lat = subgroup_lattice(g);
    auto t = transfer_from_json(read_json_file(t1_path), lat);
    bool adm;
    if (rg_target.empty()) {
      if (sub_idx < 0 || sup_idx < 0 || sub_idx >= lat->size() || sup_idx >= lat->size())
        throw InputError("subgroup index out of range");
      if (sub_idx != sup_idx && !lat->leq[sub_idx][sup_idx])
        throw InputError("--sub is not a subgroup of --sup");
      adm = t.admits(sub_idx, sup_idx);
    } else {
      auto fam = make_family({spec, rg_target}, cache_enabled());
      auto tlat = fam->lattice(1);
      if (sub_idx < 0 || sup_idx < 0 || sub_idx >= tlat->size() || sup_idx >= tlat->size())
        throw InputError("subgroup index out of range in the target member");
      if (sub_idx != sup_idx && !tlat->leq[sub_idx][sup_idx])
        throw InputError("--sub is not a subgroup of --sup in the target member");
      adm = rg_pair_admissible(t, fam, 0, 1, sub_idx, sup_idx);
    }
    std::cout << (adm ? "admissible" : "not admissible") << "\n";
  } else if (cmd_verify->parsed()) {
    if (!suite_exists(spec))
      throw InputError("unknown verify suite '" + spec +
                       "' (expected catalan|sigma3|q8|adjunction|gsets)");
    auto claims = verify_suite(spec);
    bool all = true;
    for (const auto& c : claims) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
      all = all && c.pass;
    }
    return all ? 0 : 1;
  } else if (cmd_export->parsed()) {
    auto lat = subgroup_lattice(parse_group_spec(spec));
    auto poset = enumerate_cached(lat, {}, global_closed);
    write_output(poset_to_dot(poset), out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const translat::CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const translat::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
