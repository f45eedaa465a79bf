#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mobius/complex.hpp"
#include "mobius/group.hpp"
#include "mobius/poset.hpp"

namespace mobius {

struct TheoryOptions {
  std::uint64_t interval_cap = kDefaultIntervalCap;
  std::size_t max_powerset = kDefaultPowersetBound;
  std::uint64_t subspace_cap = kDefaultSubspaceCap;
  /// Promoted stabilizers keep a product table up to this order.
  std::uint64_t table_threshold = 5'000;
};

/// The proper nontrivial H-invariant subspaces with their stabilizers in G,
/// plus the deduplicated stabilizer set.
struct StabilizerFamily {
  std::vector<Subspace> subspaces;
  /// stabs[i] stabilizes subspaces[i].
  std::vector<SubgroupRef> stabs;
  /// Distinct entries of `stabs`, in first-occurrence order.
  std::vector<SubgroupRef> distinct_stabs;
};

/// Throws ReducibleAmbientGroup unless G is irreducible and
/// SubgroupNotContained unless H is a subgroup of G.
StabilizerFamily stabilizer_family(const GroupSet& g, const SubgroupRef& h,
                                   const TheoryOptions& options = {});

/// The order ideal of the overgroups of H generated by the stabilizer family,
/// and its completion with G on top.
struct ReducibleIdeal {
  /// Members of the ideal, sorted by (order, members). Empty when H is
  /// irreducible.
  std::vector<SubgroupRef> members;
  /// hat_members[i] is element i of `hat.poset`.
  std::vector<SubgroupRef> hat_members;
  BoundedPoset hat;

  /// mu of the completed ideal from its bottom (H) to its top (G).
  long long mu_hat() const;
};

/// Built from explicit overgroup intervals [H, M] for M in the family. For
/// irreducible H the completion is the 2-chain {H, G}; for H = G it is {G}.
/// Throws NotALattice if the completion fails the lattice check.
ReducibleIdeal build_ideal(const GroupSet& g, const SubgroupRef& h, const StabilizerFamily& family,
                           const TheoryOptions& options = {});

struct PsiSums {
  long long sum_psi = 0;             ///< subsets of C(G,H) meeting above H
  long long sum_psi_complement = 0;  ///< subsets of C(G,H) meeting exactly in H
  long long sum_psi_prime = 0;       ///< subsets of S(V,H)* whose stabilizers meet above H
};

/// Depth-first powerset walks with a running intersection (G for the empty
/// family). Once the intersection reaches H the whole branch belongs to the
/// complement and its signed count is added in closed form.
PsiSums psi_sums(const GroupSet& g, const SubgroupRef& h, const StabilizerFamily& family,
                 const TheoryOptions& options = {});

struct DeltaComplexes {
  SimplicialComplex delta1;  ///< on subspaces whose stabilizer is not H
  SimplicialComplex delta2;  ///< on family members other than H
};

DeltaComplexes build_delta_complexes(const GroupSet& g, const SubgroupRef& h,
                                     const StabilizerFamily& family, const TheoryOptions& options = {});

struct TheoremReport {
  std::size_t h_order = 0;
  bool h_irreducible = false;
  std::size_t invariant_subspaces = 0;
  std::size_t distinct_stabilizers = 0;
  std::size_t ideal_size = 0;

  long long mu_hat = 0;
  long long sum_psi_prime = 0;
  long long sum_psi = 0;
  long long sum_psi_complement = 0;
  long long chi1_reduced = 0;
  long long chi2_reduced = 0;
  std::optional<long long> mu_full;
  std::optional<long long> eq3_residual;

  /// -mu_hat = sum_psi_prime = sum_psi = -chi1_reduced = -chi2_reduced.
  bool all_equal = false;

  /// all_equal, a zero residual when present, and the complement
  /// cancellation sum_psi + sum_psi_complement = 0 for reducible H. For
  /// irreducible H the family is empty and the sums are (1, 0) instead.
  bool identities_hold() const;
};

/// Computes every quantity on its own path: mu_hat on the explicit ideal, the
/// sums by powerset walks, the Euler characteristics from explicit complexes.
/// With `with_full_interval`, also mu(H, G) on the whole overgroup interval
/// and the residual of the decomposition through the ideal. H must be a
/// proper subgroup (InvalidArgument otherwise).
TheoremReport verify_theorem_4_5(const GroupSet& g, const SubgroupRef& h,
                                 const TheoryOptions& options = {}, bool with_full_interval = true);

/// mu(H, G) in the subgroup lattice, by recursion over [H, G].
long long mobius_full_interval(const GroupSet& g, const SubgroupRef& h,
                               std::uint64_t interval_cap = kDefaultIntervalCap);

/// mu(H,G) - mu_hat(H,G) + sum of mu(H,K) over H <= K < G with K outside
/// the completed ideal. Zero when the decomposition holds.
long long verify_eq3(const GroupSet& g, const SubgroupRef& h, const TheoryOptions& options = {});

/// Same, reusing an ideal already built for (G, H).
long long verify_eq3(const GroupSet& g, const SubgroupRef& h, const ReducibleIdeal& ideal,
                     const TheoryOptions& options = {});

}  // namespace mobius
