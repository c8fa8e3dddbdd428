#include <doctest.h>

#include <thread>
#include <vector>
#include "oracles.hpp"
#include "translat/lattice.hpp"

using namespace translat;

TEST_SUITE("hom") {

TEST_CASE("known hom counts") {
  auto c2 = subgroup_lattice(make_cyclic(2));
  auto s3 = subgroup_lattice(make_symmetric(3));
  CHECK(enumerate_homomorphisms(full_subgroup(c2->group), full_subgroup(c2->group)).size() == 2);
  CHECK(enumerate_homomorphisms(full_subgroup(c2->group), full_subgroup(s3->group)).size() == 4);
  CHECK(enumerate_homomorphisms(full_subgroup(s3->group), full_subgroup(s3->group)).size() == 10);
  auto q8 = subgroup_lattice(make_quaternion());
  CHECK(enumerate_homomorphisms(full_subgroup(q8->group), full_subgroup(q8->group)).size() == 28);
}

TEST_CASE("Hom(S3, <tau>) contains the sign epimorphism") {
  auto s3 = subgroup_lattice(make_symmetric(3));
  auto homs = enumerate_homomorphisms(full_subgroup(s3->group), s3->subgroups[1]);
  REQUIRE(homs.size() == 2);
  int surjections = 0;
  for (const auto& f : homs)
    if (f.is_surjective()) ++surjections;
  CHECK(surjections == 1);
}

TEST_CASE("counts match the all-functions brute force") {
  // groups of order <= 6
  std::vector<GroupPtr> groups{make_cyclic(2), make_cyclic(3), make_cyclic(4),
                               make_cyclic(6), make_symmetric(3),
                               make_direct_product(make_cyclic(2), make_cyclic(2))};
  for (const auto& a : groups)
    for (const auto& b : groups) {
      auto fa = full_subgroup(subgroup_lattice(a)->group);
      auto fb = full_subgroup(subgroup_lattice(b)->group);
      CHECK(static_cast<long long>(enumerate_homomorphisms(fa, fb).size()) ==
            oracles::brute_force_hom_count(fa, fb));
    }
}

TEST_CASE("results are valid, canonical, deterministic") {
  auto q8 = subgroup_lattice(make_quaternion());
  auto s3 = subgroup_lattice(make_symmetric(3));
  auto homs = enumerate_homomorphisms(full_subgroup(q8->group), s3->subgroups[5]);
  for (const auto& f : homs) CHECK(f.is_valid());
  for (std::size_t i = 0; i + 1 < homs.size(); ++i) CHECK(homs[i].images < homs[i + 1].images);
  auto again = enumerate_homomorphisms(full_subgroup(q8->group), s3->subgroups[5]);
  REQUIRE(homs.size() == again.size());
  for (std::size_t i = 0; i < homs.size(); ++i) CHECK(homs[i].images == again[i].images);
}

TEST_CASE("cross-parent homs between subgroups") {
  auto s3 = subgroup_lattice(make_symmetric(3));
  auto c4 = subgroup_lattice(make_cyclic(4));
  // C2 inside C4 into the full S3: same count as Hom(C2, S3)
  auto homs = enumerate_homomorphisms(c4->subgroups[1], full_subgroup(s3->group));
  CHECK(homs.size() == 4);
}

TEST_CASE("source size cap") {
  auto c64 = subgroup_lattice(make_cyclic(64));
  auto c2 = subgroup_lattice(make_cyclic(2));
  CHECK_THROWS_AS(
      enumerate_homomorphisms(full_subgroup(c64->group), full_subgroup(c2->group)),
      CapError);
}

TEST_CASE("preimages") {
  auto s3 = subgroup_lattice(make_symmetric(3));
  auto homs = enumerate_homomorphisms(full_subgroup(s3->group), s3->subgroups[1]);
  for (const auto& f : homs) {
    // preimage of the full target is the full source
    CHECK(preimage_subgroup(f, f.target).members == f.source.members);
    if (f.is_surjective()) {
      // kernel of the sign epimorphism is <sigma> = subgroup 4
      auto ker = preimage_subgroup(f, trivial_subgroup(s3->group));
      CHECK(ker.members == s3->subgroups[4].members);
    }
  }
  // kernel of the squaring epimorphism C4 ->> C2
  auto c4 = subgroup_lattice(make_cyclic(4));
  for (const auto& f :
       enumerate_homomorphisms(full_subgroup(c4->group), c4->subgroups[1])) {
    if (!f.is_surjective()) continue;
    auto ker = preimage_subgroup(f, trivial_subgroup(c4->group));
    CHECK(ker.members == c4->subgroups[1].members);
  }
  // every preimage is a subgroup
  for (const auto& f :
       enumerate_homomorphisms(full_subgroup(s3->group), full_subgroup(s3->group)))
    for (int s = 0; s < s3->size(); ++s) {
      if ((s3->subgroups[s].members & ~f.target.members) != 0) continue;
      auto pre = preimage_subgroup(f, s3->subgroups[s]);
      CHECK(is_subgroup_mask(*s3->group, pre.members));
      CHECK(s3->index_of_mask(pre.members) >= 0);
    }
  // mismatched target is rejected
  auto c2 = subgroup_lattice(make_cyclic(2));
  CHECK_THROWS_AS(preimage_subgroup(homs[0], full_subgroup(c2->group)), InputError);
}

TEST_CASE("identity, inclusion, composition") {
  auto s3 = subgroup_lattice(make_symmetric(3));
  auto id = identity_homomorphism(s3->subgroups[4]);
  CHECK(id.is_valid());
  auto inc = inclusion_homomorphism(s3->subgroups[4], full_subgroup(s3->group));
  CHECK(inc.is_valid());
  auto comp = compose_homomorphisms(inc, id);
  CHECK(comp.is_valid());
  CHECK(comp.images == inc.images);
  CHECK_THROWS_AS(inclusion_homomorphism(full_subgroup(s3->group), s3->subgroups[4]),
                  InputError);
}

TEST_CASE("lattice caches are safe for concurrent readers") {
  auto lat = subgroup_lattice(make_quaternion());
  std::vector<std::size_t> counts(8, 0);
  {
    std::vector<std::thread> pool;
    for (int w = 0; w < 8; ++w)
      pool.emplace_back([&, w] {
        std::size_t total = 0;
        for (int l = 0; l < lat->size(); ++l)
          for (int h = 0; h < lat->size(); ++h) {
            total += lat->homs_between(l, h).size();
            total += lat->pair_is_conj_rep(l, h) ? 1 : 0;
          }
        counts[w] = total;
      });
    for (auto& th : pool) th.join();
  }
  for (int w = 1; w < 8; ++w) CHECK(counts[w] == counts[0]);
  CHECK(counts[0] > 0);
}

TEST_CASE("lattice hom cache and conjugation transversal") {
  auto s3 = subgroup_lattice(make_symmetric(3));
  const auto& a = s3->homs_between(5, 1);
  const auto& b = s3->homs_between(5, 1);
  CHECK(&a == &b);
  CHECK(a.size() == 2);
  // the three reflection subgroups are one conjugation orbit; only the least
  // pair with each target is a representative
  CHECK(s3->pair_is_conj_rep(1, 1));
  CHECK_FALSE(s3->pair_is_conj_rep(2, 2));
  CHECK(s3->pair_is_conj_rep(0, 0));
  CHECK(s3->pair_is_conj_rep(4, 5));
}

}  // TEST_SUITE
