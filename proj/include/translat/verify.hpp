#pragma once

#include "translat/family.hpp"
#include "translat/gset.hpp"

namespace translat {

// Builtin group-spec grammar: "C<n>", "S<n>", "Q8", products joined with "x"
// (e.g. "C2xC2", "C2xS3"); anything else is treated as a path to a group JSON
// file. Member specs may append "@<k>" for a standalone copy of the k-th
// subgroup (canonical lattice index) of the group.
GroupPtr parse_group_spec(const std::string& spec);
GroupPtr parse_member_spec(const std::string& spec);

FamilyPtr make_family(const std::vector<std::string>& member_specs, bool disk_cache = false);

// The family {G together with standalone copies of its subgroups}, labels
// "<spec>" and "<spec>@<k>".
FamilyPtr group_with_subgroup_copies(const std::string& spec, bool disk_cache = false);
std::vector<std::string> subgroup_copy_labels(const std::string& spec);

struct Claim {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Named acceptance suites: catalan | sigma3 | q8 | adjunction | gsets.
std::vector<Claim> verify_suite(const std::string& suite);
bool suite_exists(const std::string& suite);

// Digraph isomorphism on Hasse diagrams (small posets only).
bool poset_isomorphic(int n1, const std::vector<std::pair<int, int>>& covers1, int n2,
                      const std::vector<std::pair<int, int>>& covers2);

// Expected Hasse diagrams of I_{Sigma3} and its hom-closed subposet, as
// abstract cover lists.
std::pair<int, std::vector<std::pair<int, int>>> sigma3_figure_full();
std::pair<int, std::vector<std::pair<int, int>>> sigma3_figure_hom_closed();

}  // namespace translat
