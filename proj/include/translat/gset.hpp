#pragma once

#include "translat/transfer.hpp"

namespace translat {

// A finite H-set: the acting subgroup H (of some ambient group) together with
// one permutation of {0..size-1} per member of H, in ascending member order.
// This is the same data as a homomorphism H -> Sigma_size; the symmetric
// group is only materialized as a FiniteGroup when size <= 4 (see
// gset_action_hom), since e.g. compose_orbits produces 6-point sets whose
// Sigma_6 would blow the order cap.
struct GSet {
  Subgroup acting;
  int size = 0;
  std::vector<std::vector<int>> perms;

  const std::vector<int>& perm_of(int elem) const {
    return perms[mask_rank(acting.members, elem)];
  }
  int apply(int elem, int point) const { return perm_of(elem)[point]; }
  bool is_valid() const;  // all-pairs homomorphism check
};

GSet trivial_gset(const Subgroup& h, int n);
GSet regular_gset(const Subgroup& h);
// H acting on the left cosets of K, ordered by least member element.
GSet coset_gset(const Subgroup& h, const Subgroup& k);
// The f.source-set obtained by restricting along f (image must land in
// a.acting).
GSet pullback_gset(const Homomorphism& f, const GSet& a);

// The literal homomorphism into make_symmetric(size); requires size <= 4.
Homomorphism gset_action_hom(const GSet& a);
GSet gset_from_action_hom(const Homomorphism& phi);

struct Orbit {
  std::vector<int> points;  // sorted; points[0] is the representative
  Subgroup stabilizer;      // of points[0], inside the acting subgroup's parent
};
std::vector<Orbit> orbits(const GSet& a);

// K <=_t H for the stabilizer K of every orbit (reflexive included).
bool is_admissible_gset(const TransferSystem& t, const GSet& a);

GSet disjoint_union(const GSet& a, const GSet& b);

// Block permutation: position (offset of block i) + j goes to (offset of slot
// sigma[i]) + j; order inside blocks is preserved.
std::vector<int> blk(const std::vector<int>& sigma, const std::vector<int>& sizes);

// For transitive big = G/H and small = H/K (H the stabilizer of big's point
// 0), the G-set G/K of size m*n via G -> Sigma_m wr Sigma_n -> Sigma_{mn}.
GSet compose_orbits(const LatticePtr& lat, const GSet& big, const GSet& small);

// Equality of G-sets up to relabeling of points: same acting subgroup and the
// same multiset of (orbit size, stabilizer conjugacy class).
std::vector<std::pair<int, int>> gset_orbit_signature(const LatticePtr& lat, const GSet& a);
bool gset_equivalent(const LatticePtr& lat, const GSet& a, const GSet& b);

// A subgroup of a product group G x Sigma_n meeting {e} x Sigma_n trivially,
// together with the (H' <= G, phi) it is the graph of; the witness is stored
// as the H'-set itself.
struct GraphSubgroup {
  GroupPtr carrier;  // built by make_direct_product(G, make_symmetric(n))
  ElemMask members = 0;
  GSet witness;
};

GraphSubgroup graph_of(const GSet& a);

struct GraphWitnessResult {
  bool ok = false;
  GSet witness;
  int offending = -1;  // carrier element (e, sigma) violating the graph condition
};
// Decides whether gamma (a subgroup of a product carrier whose right factor
// is a symmetric group) is a graph subgroup, and extracts the witness.
GraphWitnessResult graph_to_witness(const Subgroup& gamma);

// All graph subgroups of G x Sigma_n whose witness H-set is admissible for t.
struct AdmissibleFamily {
  GroupPtr group;
  int arity = 0;
  LatticePtr carrier_lattice;
  std::vector<int> graphs;  // carrier-lattice subgroup indices, ascending

  bool contains(int carrier_sub_index) const;
};

AdmissibleFamily admissible_family(const TransferSystem& t, int n);

// Reads the transfer relation back off a per-arity stack of families:
// (K,H) is set iff the graph of H/K lies in the family of arity [H:K].
// Families must be consistent (closure invariants plus the orbit criterion).
TransferSystem transfer_of_family(const std::vector<AdmissibleFamily>& fams,
                                  const LatticePtr& lat);

}  // namespace translat
