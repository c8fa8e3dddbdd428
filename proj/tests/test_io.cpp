#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "translat/cache.hpp"
#include "translat/json_io.hpp"
#include "translat/verify.hpp"

using namespace translat;

TEST_SUITE("io") {

TEST_CASE("group JSON round trip is byte-identical") {
  for (auto g : {make_symmetric(3), make_quaternion(),
                 make_direct_product(make_cyclic(2), make_cyclic(2))}) {
    auto dump = canonical_dump(group_to_json(*g));
    auto back = group_from_json(nlohmann::json::parse(dump));
    CHECK(canonical_dump(group_to_json(*back)) == dump);
    CHECK(group_key(*back) == group_key(*g));
  }
}

TEST_CASE("group JSON validation") {
  auto j = group_to_json(*make_cyclic(3));
  j["table"][1][1] = 1;
  CHECK_THROWS_AS(group_from_json(j), InputError);
  j = group_to_json(*make_cyclic(3));
  j["order"] = 4;
  CHECK_THROWS_AS(group_from_json(j), InputError);
  CHECK_THROWS_AS(group_from_json(nlohmann::json{{"name", "x"}}), InputError);
}

TEST_CASE("subgroup JSON") {
  auto lat = subgroup_lattice(make_symmetric(3));
  for (const auto& s : lat->subgroups) {
    auto dump = canonical_dump(subgroup_to_json(s));
    auto back = subgroup_from_json(nlohmann::json::parse(dump), lat->group);
    CHECK(back.members == s.members);
    CHECK(canonical_dump(subgroup_to_json(back)) == dump);
  }
  CHECK_THROWS_AS(subgroup_from_json(nlohmann::json::parse("[1,2]"), lat->group),
                  InputError);
  CHECK_THROWS_AS(subgroup_from_json(nlohmann::json::parse("[0,9]"), lat->group),
                  InputError);
}

TEST_CASE("transfer and poset JSON round trips") {
  auto lat = subgroup_lattice(make_symmetric(3));
  auto poset = enumerate_transfer_systems(lat);
  for (const auto& t : poset.systems) {
    auto dump = canonical_dump(transfer_to_json(t));
    auto back = transfer_from_json(nlohmann::json::parse(dump), lat);
    CHECK(back.edges == t.edges);
    CHECK(canonical_dump(transfer_to_json(back)) == dump);
  }
  auto pd = canonical_dump(poset_to_json(poset));
  CHECK(canonical_dump(ordered_json::parse(pd)) == pd);

  CHECK_THROWS_AS(
      transfer_from_json(nlohmann::json{{"edges", {{1, 2}}}}, lat), InputError);
  CHECK_THROWS_AS(
      transfer_from_json(nlohmann::json{{"group", "C4"}, {"edges", nlohmann::json::array()}}, lat),
      InputError);
}

TEST_CASE("family system JSON round trip") {
  auto fam = make_family({"C2", "C4"});
  auto s = r_g(empty_system(fam->lattice(0)), fam, 0);
  auto dump = canonical_dump(family_system_to_json(s));
  auto back = family_system_from_json(nlohmann::json::parse(dump), fam);
  CHECK(back == s);
  CHECK(canonical_dump(family_system_to_json(back)) == dump);
}

TEST_CASE("gset JSON round trip") {
  auto lat = subgroup_lattice(make_symmetric(3));
  auto a = coset_gset(full_subgroup(lat->group), lat->subgroups[1]);
  auto dump = canonical_dump(gset_to_json(a));
  auto back = gset_from_json(nlohmann::json::parse(dump), lat);
  CHECK(back.acting.members == a.acting.members);
  CHECK(back.perms == a.perms);
  CHECK(canonical_dump(gset_to_json(back)) == dump);
  // broken action rejected
  auto j = nlohmann::json::parse(dump);
  j["images"][1] = j["images"][0];
  CHECK_THROWS_AS(gset_from_json(j, lat), InputError);
}

TEST_CASE("admissible family JSON") {
  auto lat = subgroup_lattice(make_symmetric(3));
  auto fam = admissible_family(complete_system(lat), 2);
  auto j = admissible_family_to_json(fam);
  CHECK(j["graphs"].size() == 10);
  auto dump = canonical_dump(j);
  CHECK(canonical_dump(ordered_json::parse(dump)) == dump);
}

TEST_CASE("DOT output") {
  auto poset = enumerate_transfer_systems(subgroup_lattice(make_symmetric(3)));
  auto dot = poset_to_dot(poset);
  CHECK(dot.find("digraph transfer_poset {") == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  std::size_t nodes = 0, arrows = 0, pos = 0;
  while ((pos = dot.find("[label=", pos)) != std::string::npos) {
    ++nodes;
    ++pos;
  }
  pos = 0;
  while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
    ++arrows;
    ++pos;
  }
  CHECK(nodes == poset.systems.size());
  CHECK(arrows == poset.covers.size());
  // balanced braces (the digraph block plus one {...} label per node)
  CHECK(std::count(dot.begin(), dot.end(), '{') ==
        std::count(dot.begin(), dot.end(), '}'));
}

TEST_CASE("disk cache") {
  auto dir = std::filesystem::temp_directory_path() / "translat_cache_test";
  std::filesystem::remove_all(dir);
  setenv("TRANSFER_LATTICE_CACHE", dir.c_str(), 1);
  set_cache_enabled(true);

  CHECK_FALSE(cache_get("key-one").has_value());
  cache_put("key-one", nlohmann::json{{"x", 1}});
  auto hit = cache_get("key-one");
  REQUIRE(hit.has_value());
  CHECK((*hit)["x"] == 1);

  // colliding file with a different stored key reads as a miss
  auto path = dir / (fnv1a_hex("key-two") + ".json");
  {
    std::ofstream out(path);
    out << nlohmann::json{{"version", kCacheVersion}, {"key", "other"}, {"value", 7}}.dump();
  }
  CHECK_FALSE(cache_get("key-two").has_value());

  // corrupted entries read as a miss
  {
    std::ofstream out(dir / (fnv1a_hex("key-three") + ".json"));
    out << "{not json";
  }
  CHECK_FALSE(cache_get("key-three").has_value());

  // stale version reads as a miss
  {
    std::ofstream out(dir / (fnv1a_hex("key-four") + ".json"));
    out << nlohmann::json{{"version", kCacheVersion + 1}, {"key", "key-four"}, {"value", 7}}
               .dump();
  }
  CHECK_FALSE(cache_get("key-four").has_value());

  set_cache_enabled(false);
  cache_put("key-five", nlohmann::json{{"x", 1}});
  CHECK_FALSE(cache_get("key-five").has_value());
  set_cache_enabled(true);
  CHECK_FALSE(cache_get("key-five").has_value());

  // family hom tables: disk round trip must not change results
  {
    auto fam1 = make_family({"C2", "C4"}, /*disk_cache=*/true);
    auto r1 = r_g(empty_system(fam1->lattice(0)), fam1, 0);
    auto fam2 = make_family({"C2", "C4"}, /*disk_cache=*/true);  // hits the disk entries
    auto r2 = r_g(empty_system(fam2->lattice(0)), fam2, 0);
    for (int m = 0; m < 2; ++m) CHECK(r1.per_member[m].edges == r2.per_member[m].edges);
    auto fam3 = make_family({"C2", "C4"}, /*disk_cache=*/false);
    auto r3 = r_g(empty_system(fam3->lattice(0)), fam3, 0);
    for (int m = 0; m < 2; ++m) CHECK(r1.per_member[m].edges == r3.per_member[m].edges);
  }

  std::filesystem::remove_all(dir);
  unsetenv("TRANSFER_LATTICE_CACHE");
}

TEST_CASE("interned lattices keep constructor metadata") {
  // a JSON twin has no sym_degree / factor metadata; the shared lattice
  // handle must still end up carrying it
  auto twin = group_from_json(
      nlohmann::json::parse(canonical_dump(group_to_json(*make_symmetric(2)))));
  CHECK(twin->sym_degree == -1);
  auto lat = subgroup_lattice(twin);
  auto lat2 = subgroup_lattice(make_symmetric(2));
  CHECK(lat.get() == lat2.get());
  CHECK(lat->group->sym_degree == 2);

  auto prod_twin = group_from_json(nlohmann::json::parse(
      canonical_dump(group_to_json(*make_direct_product(make_cyclic(2), make_symmetric(2))))));
  auto plat = subgroup_lattice(prod_twin);
  subgroup_lattice(make_direct_product(make_cyclic(2), make_symmetric(2)));
  REQUIRE(plat->group->factor_right != nullptr);
  CHECK(plat->group->factor_right->sym_degree == 2);
}

TEST_CASE("hom witness JSON") {
  auto lat = subgroup_lattice(make_symmetric(3));
  auto t = close(lat, {{0, 1}});
  auto r = is_hom_closed(t);
  REQUIRE_FALSE(r.closed);
  auto j = hom_witness_to_json(*r.witness, lat);
  CHECK(j["source"] == 5);
  CHECK(j["preimage"] == 4);
  CHECK(j["theta"].size() == 6);
}

}  // TEST_SUITE
