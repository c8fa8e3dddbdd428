#include <doctest.h>

#include <numeric>
#include <set>

#include "translat/gset.hpp"
#include "translat/hom_closure.hpp"

using namespace translat;

namespace {

LatticePtr s3() { return subgroup_lattice(make_symmetric(3)); }

std::vector<GSet> gsets_up_to(const LatticePtr& lat, int max_size) {
  std::vector<GSet> out;
  for (int h = 0; h < lat->size(); ++h)
    for (int n = 0; n <= max_size; ++n) {
      auto sym = full_subgroup(subgroup_lattice(make_symmetric(n))->group);
      for (const auto& phi : enumerate_homomorphisms(lat->subgroups[h], sym))
        out.push_back(gset_from_action_hom(phi));
    }
  return out;
}

}  // namespace

TEST_SUITE("gset") {

TEST_CASE("constructors produce valid actions") {
  auto lat = s3();
  CHECK(trivial_gset(lat->subgroups[5], 3).is_valid());
  CHECK(regular_gset(lat->subgroups[5]).is_valid());
  CHECK(regular_gset(lat->subgroups[4]).is_valid());
  CHECK(coset_gset(lat->subgroups[5], lat->subgroups[1]).is_valid());
  CHECK(coset_gset(lat->subgroups[5], lat->subgroups[5]).size == 1);
  CHECK_THROWS_AS(coset_gset(lat->subgroups[1], lat->subgroups[4]), InputError);
}

TEST_CASE("orbit computation") {
  auto lat = s3();
  // trivial action: one orbit per point, full stabilizers
  auto triv = trivial_gset(lat->subgroups[5], 3);
  auto os = orbits(triv);
  REQUIRE(os.size() == 3);
  for (const auto& o : os) CHECK(o.stabilizer.members == lat->subgroups[5].members);

  // regular C4-set: one free orbit
  auto c4 = subgroup_lattice(make_cyclic(4));
  auto reg = regular_gset(full_subgroup(c4->group));
  os = orbits(reg);
  REQUIRE(os.size() == 1);
  CHECK(os[0].points.size() == 4);
  CHECK(os[0].stabilizer.order() == 1);

  // a reflection subgroup acting on the cosets of another reflection:
  // one fixed point plus one free 2-orbit
  auto cosets = coset_gset(lat->subgroups[5], lat->subgroups[1]);
  auto pulled = pullback_gset(
      inclusion_homomorphism(lat->subgroups[2], lat->subgroups[5]), cosets);
  os = orbits(pulled);
  REQUIRE(os.size() == 2);
  std::vector<int> stab_sizes;
  for (const auto& o : os) stab_sizes.push_back(o.stabilizer.order());
  std::sort(stab_sizes.begin(), stab_sizes.end());
  CHECK(stab_sizes == std::vector<int>{1, 2});

  // orbit sizes satisfy orbit-stabilizer
  for (const auto& o : os)
    CHECK(o.points.size() * o.stabilizer.order() == pulled.acting.order());
}

TEST_CASE("admissibility via orbit stabilizers") {
  auto lat = s3();
  auto all = complete_system(lat);
  auto none = empty_system(lat);
  for (int h = 0; h < lat->size(); ++h)
    CHECK(is_admissible_gset(none, trivial_gset(lat->subgroups[h], 2)));
  CHECK_FALSE(is_admissible_gset(none, regular_gset(lat->subgroups[5])));
  CHECK(is_admissible_gset(all, regular_gset(lat->subgroups[5])));
  auto c4 = subgroup_lattice(make_cyclic(4));
  CHECK_THROWS_AS(is_admissible_gset(all, regular_gset(full_subgroup(c4->group))),
                  InputError);
}

TEST_CASE("disjoint union") {
  auto lat = s3();
  auto reg = regular_gset(lat->subgroups[1]);
  auto empty = trivial_gset(lat->subgroups[1], 0);
  auto u = disjoint_union(reg, empty);
  CHECK(u.size == reg.size);
  CHECK(u.perms == reg.perms);

  auto point = trivial_gset(lat->subgroups[1], 1);
  auto three = disjoint_union(reg, point);
  CHECK(three.size == 3);
  auto os = orbits(three);
  REQUIRE(os.size() == 2);
  CHECK(os[0].points.size() + os[1].points.size() == 3);

  auto t2 = disjoint_union(trivial_gset(lat->subgroups[5], 1),
                           trivial_gset(lat->subgroups[5], 2));
  CHECK(t2.perms == trivial_gset(lat->subgroups[5], 3).perms);
  CHECK_THROWS_AS(disjoint_union(reg, trivial_gset(lat->subgroups[2], 1)), InputError);
}

TEST_CASE("disjoint-union admissibility biconditional on S3") {
  auto lat = s3();
  auto poset = enumerate_transfer_systems(lat);
  auto gsets = gsets_up_to(lat, 3);
  for (const auto& t : poset.systems)
    for (const auto& a : gsets)
      for (const auto& b : gsets) {
        if (!(a.acting == b.acting)) continue;
        bool both = is_admissible_gset(t, a) && is_admissible_gset(t, b);
        CHECK(is_admissible_gset(t, disjoint_union(a, b)) == both);
      }
}

TEST_CASE("blk") {
  CHECK(blk({0, 1, 2}, {2, 3, 1}) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(blk({1, 0}, {2, 1}) == std::vector<int>{1, 2, 0});
  CHECK(blk({}, {}) == std::vector<int>{});
  CHECK_THROWS_AS(blk({0, 0}, {1, 1}), InputError);
  CHECK_THROWS_AS(blk({0}, {-1}), InputError);

  // equal blocks: a homomorphism Sigma_k -> Sigma_{k n'}
  for (int k = 1; k <= 3; ++k)
    for (int bs = 1; bs <= 2; ++bs) {
      std::vector<int> p(k);
      std::iota(p.begin(), p.end(), 0);
      std::vector<std::vector<int>> perms;
      do perms.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      std::vector<int> sizes(k, bs);
      for (const auto& sig : perms)
        for (const auto& tau : perms) {
          std::vector<int> st(k);
          for (int i = 0; i < k; ++i) st[i] = sig[tau[i]];
          auto lhs = blk(st, sizes);
          auto bs1 = blk(sig, sizes), bs2 = blk(tau, sizes);
          std::vector<int> rhs(lhs.size());
          for (std::size_t x = 0; x < rhs.size(); ++x) rhs[x] = bs1[bs2[x]];
          CHECK(lhs == rhs);
        }
    }

  // and the recorded counterexample at sizes (2,1)
  auto b = blk({1, 0}, {2, 1});
  std::vector<int> square(3);
  for (int x = 0; x < 3; ++x) square[x] = b[b[x]];
  CHECK(square != blk({0, 1}, {2, 1}));
}

TEST_CASE("compose_orbits") {
  auto lat = s3();
  auto full = full_subgroup(lat->group);

  // H = G: big is one point, result is small
  auto small = coset_gset(full, lat->subgroups[4]);
  auto comp = compose_orbits(lat, coset_gset(full, full), small);
  CHECK(comp.perms == small.perms);

  // K = H: small is one point, result is big up to relabeling
  auto big = coset_gset(full, lat->subgroups[1]);
  comp = compose_orbits(lat, big, coset_gset(lat->subgroups[1], lat->subgroups[1]));
  CHECK(gset_equivalent(lat, comp, big));

  // G = S3, H = <sigma>, K = {e}: a free transitive 6-point S3-set
  auto sigma = lat->subgroups[4];
  comp = compose_orbits(lat, coset_gset(full, sigma), coset_gset(sigma, lat->subgroups[0]));
  CHECK(comp.is_valid());
  CHECK(comp.size == 6);
  auto os = orbits(comp);
  REQUIRE(os.size() == 1);
  CHECK(os[0].stabilizer.order() == 1);
  CHECK(gset_equivalent(lat, comp, coset_gset(full, lat->subgroups[0])));

  // mismatched small group is rejected
  CHECK_THROWS_AS(
      compose_orbits(lat, coset_gset(full, sigma), regular_gset(lat->subgroups[1])),
      InputError);
}

TEST_CASE("compose_orbits agreement with transitivity over I_S3") {
  auto lat = s3();
  auto poset = enumerate_transfer_systems(lat);
  int top = lat->size() - 1;
  auto full = full_subgroup(lat->group);
  for (const auto& t : poset.systems)
    for (int h = 0; h < lat->size(); ++h) {
      if (!lat->leq[h][top]) continue;
      for (int k = 0; k < lat->size(); ++k) {
        if (!lat->leq[k][h]) continue;
        auto comp = compose_orbits(lat, coset_gset(full, lat->subgroups[h]),
                                   coset_gset(lat->subgroups[h], lat->subgroups[k]));
        CHECK(is_admissible_gset(t, comp) == t.admits(k, top));
        if (t.admits(k, h) && t.admits(h, top)) CHECK(is_admissible_gset(t, comp));
      }
    }
}

TEST_CASE("graphs of actions") {
  auto lat = s3();
  // trivial action gives H x {e}
  auto g = graph_of(trivial_gset(lat->subgroups[4], 2));
  CHECK(g.carrier->order == 12);
  ElemMask expect = 0;
  for (int x : lat->subgroups[4].member_list()) expect |= ElemMask{1} << (x * 2);
  CHECK(g.members == expect);

  // the regular C2-set sits diagonally inside C2 x S2
  auto c2 = subgroup_lattice(make_cyclic(2));
  auto diag = graph_of(regular_gset(full_subgroup(c2->group)));
  CHECK(diag.carrier->order == 4);
  CHECK(mask_size(diag.members) == 2);
  CHECK(diag.members == ((ElemMask{1} << 0) | (ElemMask{1} << 3)));

  // the coset action of S3 on S3/<tau> is the standard degree-3 action
  auto deg3 = graph_of(coset_gset(full_subgroup(lat->group), lat->subgroups[1]));
  CHECK(deg3.carrier->order == 36);
  CHECK(mask_size(deg3.members) == 6);
  auto w = graph_to_witness(Subgroup{deg3.carrier, deg3.members});
  REQUIRE(w.ok);
  CHECK(orbits(w.witness).size() == 1);

  // a 6-point G-set has no 64-element carrier
  CHECK_THROWS_AS(graph_of(regular_gset(full_subgroup(lat->group))), CapError);
}

TEST_CASE("graph_to_witness") {
  auto c2 = subgroup_lattice(make_cyclic(2));
  auto prod = make_direct_product(c2->group, make_symmetric(2));
  auto plat = subgroup_lattice(prod);

  int graphs = 0;
  for (int s = 0; s < plat->size(); ++s) {
    auto w = graph_to_witness(plat->subgroups[s]);
    if (!w.ok) {
      CHECK(w.offending >= 0);
      continue;
    }
    ++graphs;
    CHECK(w.witness.is_valid());
    // round-trip through graph_of
    auto back = graph_of(w.witness);
    CHECK(back.members == plat->subgroups[s].members);
  }
  CHECK(graphs == 3);  // {e}, C2 x {e}, and the diagonal

  // {e} x S2 is not a graph subgroup
  Subgroup bad{plat->group, (ElemMask{1} << 0) | (ElemMask{1} << 1)};
  auto w = graph_to_witness(bad);
  CHECK_FALSE(w.ok);
  CHECK(w.offending == 1);

  // groups without product metadata are rejected
  CHECK_THROWS_AS(graph_to_witness(full_subgroup(c2->group)), InputError);
}

TEST_CASE("admissible families") {
  auto lat = s3();
  auto all = complete_system(lat);
  auto none = empty_system(lat);

  // complete system: every graph subgroup; frozen counts from the oracle
  CHECK(admissible_family(all, 2).graphs.size() == 10);
  CHECK(admissible_family(all, 3).graphs.size() == 26);
  auto q8 = subgroup_lattice(make_quaternion());
  CHECK(admissible_family(complete_system(q8), 2).graphs.size() == 13);
  CHECK(admissible_family(complete_system(q8), 3).graphs.size() == 27);

  // empty system at arity 2: only graphs of trivial actions survive
  auto f0 = admissible_family(none, 2);
  CHECK(f0.graphs.size() == 6);
  for (int s : f0.graphs) {
    auto w = graph_to_witness(f0.carrier_lattice->subgroups[s]);
    for (const auto& p : w.witness.perms) CHECK(p == std::vector<int>{0, 1});
  }

  // every family contains H x {e} for every H
  for (const auto& t : {all, none, close(lat, {{0, 4}})})
    for (int n = 0; n <= 3; ++n) {
      auto fam = admissible_family(t, n);
      for (int h = 0; h < lat->size(); ++h) {
        auto triv = graph_of(trivial_gset(lat->subgroups[h], n));
        CHECK(fam.contains(fam.carrier_lattice->index_of_mask(triv.members)));
      }
    }

  CHECK_THROWS_AS(admissible_family(all, 5), CapError);
  // S3 x S4 would have order 144
  CHECK_THROWS_AS(admissible_family(all, 4), CapError);
}

TEST_CASE("transfer_of_family round trip on S3") {
  auto lat = s3();
  auto poset = enumerate_transfer_systems(lat);
  for (const auto& t : poset.systems) {
    std::vector<AdmissibleFamily> fams;
    for (int n = 0; n <= 3; ++n) fams.push_back(admissible_family(t, n));
    auto back = transfer_of_family(fams, lat);
    // recoverable exactly on pairs of index <= 3
    for (int p = 0; p < lat->num_pairs(); ++p) {
      auto [k, h] = lat->pairs[p];
      if (lat->index_in[h][k] <= 3)
        CHECK(back.edges[p] == t.edges[p]);
      else
        CHECK_FALSE(back.edges[p]);
    }
  }
}

TEST_CASE("transfer_of_family rejects inconsistent input") {
  auto lat = s3();
  auto t = close(lat, {{0, 1}});  // all (e, reflection) transfers
  // families of different systems mixed across arities: each arity is
  // individually closed, but a free 2-orbit inside an arity-3 set is
  // admissible at arity 3 while its orbit is missing at arity 2
  std::vector<AdmissibleFamily> fams;
  fams.push_back(admissible_family(t, 0));
  fams.push_back(admissible_family(t, 1));
  fams.push_back(admissible_family(empty_system(lat), 2));
  fams.push_back(admissible_family(t, 3));
  CHECK_THROWS_AS(transfer_of_family(fams, lat), InputError);
}

}  // TEST_SUITE
