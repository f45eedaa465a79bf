#include "mobius/theory.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace mobius {

namespace {

void require_subgroup(const GroupSet& g, const SubgroupRef& h) {
  if (h.parent().get() != &g) throw Error(Errc::SubgroupNotContained, "H is not a subgroup of G");
}

bool is_whole(const GroupSet& g, const SubgroupRef& h) { return h.order() == g.order(); }

SubgroupRef restrict_to(const SubgroupRef& h, const GroupPtr& sub) {
  const auto& map = sub->parent_index();
  BitSet members(sub->order());
  h.members().for_each([&](std::size_t i) {
    const auto it = std::lower_bound(map.begin(), map.end(), static_cast<ElementId>(i));
    if (it == map.end() || *it != i) throw Error(Errc::SubgroupNotContained, "H is not inside M");
    members.set(static_cast<std::size_t>(it - map.begin()));
  });
  return sub->subgroup_from_members(members);
}

FinitePoset inclusion_poset(const std::vector<SubgroupRef>& groups, std::vector<std::string> labels) {
  return FinitePoset::from_relation(std::move(labels), [&](std::size_t a, std::size_t b) {
    return groups[a].members().is_subset_of(groups[b].members());
  });
}

std::string subgroup_label(std::size_t index, const SubgroupRef& k) {
  return "K" + std::to_string(index) + "[" + std::to_string(k.order()) + "]";
}

// Pruned walk over subsets of `sets`: returns (sum over intersections != target,
// sum over intersections == target). The empty family intersects to `whole`.
std::pair<long long, long long> pruned_split(const std::vector<BitSet>& sets, const BitSet& whole,
                                             const BitSet& target) {
  long long above = 0, equal = 0;
  const std::size_t m = sets.size();
  struct Walker {
    const std::vector<BitSet>& sets;
    const BitSet& target;
    std::size_t m;
    long long& above;
    long long& equal;
    void operator()(std::size_t start, const BitSet& cur, int sign) const {
      if (cur == target) {
        // Every extension by indices >= start stays at target; their signs
        // cancel unless no index is left.
        if (start == m) equal += sign;
        return;
      }
      above += sign;
      for (std::size_t j = start; j < m; ++j) (*this)(j + 1, cur & sets[j], -sign);
    }
  };
  Walker{sets, target, m, above, equal}(0, whole, 1);
  return {above, equal};
}

// Subsets of `sets` whose intersection differs from `target`, as face masks.
std::vector<Face> faces_above(const std::vector<BitSet>& sets, const BitSet& whole, const BitSet& target) {
  std::vector<Face> faces;
  struct Walker {
    const std::vector<BitSet>& sets;
    const BitSet& target;
    std::vector<Face>& faces;
    void operator()(std::size_t start, const BitSet& cur, Face face) const {
      if (cur == target) return;
      faces.push_back(face);
      for (std::size_t j = start; j < sets.size(); ++j) (*this)(j + 1, cur & sets[j], face | (Face{1} << j));
    }
  };
  Walker{sets, target, faces}(0, whole, 0);
  return faces;
}

struct FullInterval {
  std::vector<SubgroupRef> groups;
  std::vector<long long> mu;  // mu(H, groups[i])
  std::size_t top = 0;
};

FullInterval full_interval(const GroupSet& g, const SubgroupRef& h, std::uint64_t cap) {
  require_subgroup(g, h);
  FullInterval out;
  out.groups = overgroup_interval(g, h, cap);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.groups.size(); ++i) labels.push_back(subgroup_label(i, out.groups[i]));
  const FinitePoset poset = inclusion_poset(out.groups, std::move(labels));
  const auto bottom = std::find(out.groups.begin(), out.groups.end(), h) - out.groups.begin();
  out.mu = mobius_from(poset, static_cast<std::size_t>(bottom));
  out.top = out.groups.size() - 1;  // sorted by order, G last
  return out;
}

}  // namespace

StabilizerFamily stabilizer_family(const GroupSet& g, const SubgroupRef& h, const TheoryOptions& options) {
  require_subgroup(g, h);
  if (!is_irreducible(g)) throw Error(Errc::ReducibleAmbientGroup, "G fixes a proper nontrivial subspace");
  StabilizerFamily family;
  const auto gens = h.generator_matrices();
  family.subspaces = invariant_subspaces(g.field(), g.dim(), gens, true, options.subspace_cap).elements;
  std::unordered_map<BitSet, std::size_t, BitSetHash> seen;
  for (const Subspace& w : family.subspaces) {
    SubgroupRef s = stabilizer(g, w);
    if (seen.emplace(s.members(), family.distinct_stabs.size()).second) family.distinct_stabs.push_back(s);
    family.stabs.push_back(std::move(s));
  }
  return family;
}

long long ReducibleIdeal::mu_hat() const {
  if (hat.bottom == hat.top) return 1;
  return mobius_from(hat.poset, hat.bottom)[hat.top];
}

ReducibleIdeal build_ideal(const GroupSet& g, const SubgroupRef& h, const StabilizerFamily& family,
                           const TheoryOptions& options) {
  require_subgroup(g, h);
  ReducibleIdeal ideal;
  const SubgroupRef whole = g.whole();
  if (is_whole(g, h)) {
    ideal.hat_members = {whole};
    ideal.hat = BoundedPoset{FinitePoset::from_relation({"G"}, [](std::size_t, std::size_t) { return true; }), 0, 0};
    return ideal;
  }
  if (family.distinct_stabs.empty()) {
    ideal.hat_members = {h, whole};
    ideal.hat = adjoin_bounds(FinitePoset{});
    return ideal;
  }

  GroupOptions promote_options;
  promote_options.table_threshold = options.table_threshold;
  std::unordered_map<BitSet, std::size_t, BitSetHash> seen;
  for (const SubgroupRef& m : family.distinct_stabs) {
    if (!h.is_subgroup_of(m)) throw Error(Errc::SubgroupNotContained, "H is not in a family stabilizer");
    const GroupPtr local = GroupSet::promote(m, promote_options);
    for (const SubgroupRef& k : overgroup_interval(*local, restrict_to(h, local), options.interval_cap)) {
      SubgroupRef lifted = lift_to_parent(k, g.shared_from_this());
      if (seen.emplace(lifted.members(), ideal.members.size()).second) {
        ideal.members.push_back(std::move(lifted));
        if (ideal.members.size() > options.interval_cap)
          throw Error(Errc::IntervalTooLarge, "ideal exceeds cap " + std::to_string(options.interval_cap));
      }
    }
  }
  std::sort(ideal.members.begin(), ideal.members.end());
  ideal.hat_members = ideal.members;
  ideal.hat_members.push_back(whole);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ideal.members.size(); ++i) labels.push_back(subgroup_label(i, ideal.members[i]));
  labels.emplace_back("G");
  FinitePoset poset = inclusion_poset(ideal.hat_members, std::move(labels));
  const auto bottom = std::find(ideal.hat_members.begin(), ideal.hat_members.end(), h);
  if (bottom == ideal.hat_members.end()) throw Error(Errc::HypothesisViolated, "H missing from its own ideal");
  if (!is_lattice(poset)) throw Error(Errc::NotALattice, "completed ideal is not a lattice");
  ideal.hat = BoundedPoset{std::move(poset), static_cast<std::size_t>(bottom - ideal.hat_members.begin()),
                           ideal.hat_members.size() - 1};
  return ideal;
}

PsiSums psi_sums(const GroupSet& g, const SubgroupRef& h, const StabilizerFamily& family,
                 const TheoryOptions& options) {
  require_subgroup(g, h);
  if (family.distinct_stabs.size() > options.max_powerset || family.subspaces.size() > options.max_powerset)
    throw Error(Errc::PowersetTooLarge, "stabilizer family exceeds powerset bound " +
                                            std::to_string(options.max_powerset));
  const BitSet whole = g.whole().members();
  std::vector<BitSet> distinct, per_subspace;
  for (const auto& m : family.distinct_stabs) distinct.push_back(m.members());
  for (const auto& m : family.stabs) per_subspace.push_back(m.members());

  PsiSums sums;
  std::tie(sums.sum_psi, sums.sum_psi_complement) = pruned_split(distinct, whole, h.members());
  sums.sum_psi_prime = pruned_split(per_subspace, whole, h.members()).first;
  return sums;
}

DeltaComplexes build_delta_complexes(const GroupSet& g, const SubgroupRef& h,
                                     const StabilizerFamily& family, const TheoryOptions& options) {
  require_subgroup(g, h);
  if (family.distinct_stabs.size() > options.max_powerset || family.subspaces.size() > options.max_powerset)
    throw Error(Errc::PowersetTooLarge, "stabilizer family exceeds powerset bound " +
                                            std::to_string(options.max_powerset));
  const BitSet whole = g.whole().members();

  std::vector<std::string> labels1;
  std::vector<BitSet> sets1;
  for (std::size_t i = 0; i < family.subspaces.size(); ++i) {
    if (family.stabs[i] == h) continue;
    labels1.push_back(family.subspaces[i].to_string());
    sets1.push_back(family.stabs[i].members());
  }
  std::vector<std::string> labels2;
  std::vector<BitSet> sets2;
  for (std::size_t i = 0; i < family.distinct_stabs.size(); ++i) {
    if (family.distinct_stabs[i] == h) continue;
    labels2.push_back("M" + std::to_string(i) + "[" + std::to_string(family.distinct_stabs[i].order()) + "]");
    sets2.push_back(family.distinct_stabs[i].members());
  }
  DeltaComplexes out;
  out.delta1 = SimplicialComplex::from_faces(std::move(labels1), faces_above(sets1, whole, h.members()), true);
  out.delta2 = SimplicialComplex::from_faces(std::move(labels2), faces_above(sets2, whole, h.members()), true);
  return out;
}

bool TheoremReport::identities_hold() const {
  if (!all_equal) return false;
  // Over an empty family the powerset is {∅}, so the two sums are 1 and 0.
  const long long expected = h_irreducible ? 1 : 0;
  if (sum_psi + sum_psi_complement != expected) return false;
  if (eq3_residual && *eq3_residual != 0) return false;
  return true;
}

TheoremReport verify_theorem_4_5(const GroupSet& g, const SubgroupRef& h, const TheoryOptions& options,
                                 bool with_full_interval) {
  require_subgroup(g, h);
  if (is_whole(g, h)) throw Error(Errc::InvalidArgument, "H = G is outside the theorem's range");

  TheoremReport r;
  const StabilizerFamily family = stabilizer_family(g, h, options);
  r.h_order = h.order();
  r.h_irreducible = family.subspaces.empty();
  r.invariant_subspaces = family.subspaces.size();
  r.distinct_stabilizers = family.distinct_stabs.size();

  const ReducibleIdeal ideal = build_ideal(g, h, family, options);
  r.ideal_size = ideal.members.size();
  r.mu_hat = ideal.mu_hat();

  const PsiSums sums = psi_sums(g, h, family, options);
  r.sum_psi = sums.sum_psi;
  r.sum_psi_complement = sums.sum_psi_complement;
  r.sum_psi_prime = sums.sum_psi_prime;

  const DeltaComplexes deltas = build_delta_complexes(g, h, family, options);
  r.chi1_reduced = euler(deltas.delta1).chi_reduced;
  r.chi2_reduced = euler(deltas.delta2).chi_reduced;

  if (with_full_interval) {
    r.mu_full = mobius_full_interval(g, h, options.interval_cap);
    r.eq3_residual = verify_eq3(g, h, ideal, options);
  }

  const long long target = -r.mu_hat;
  r.all_equal = r.sum_psi_prime == target && r.sum_psi == target && -r.chi1_reduced == target &&
                -r.chi2_reduced == target;
  return r;
}

long long mobius_full_interval(const GroupSet& g, const SubgroupRef& h, std::uint64_t interval_cap) {
  const FullInterval interval = full_interval(g, h, interval_cap);
  return interval.mu[interval.top];
}

long long verify_eq3(const GroupSet& g, const SubgroupRef& h, const TheoryOptions& options) {
  if (is_whole(g, h)) return verify_eq3(g, h, build_ideal(g, h, StabilizerFamily{}, options), options);
  return verify_eq3(g, h, build_ideal(g, h, stabilizer_family(g, h, options), options), options);
}

long long verify_eq3(const GroupSet& g, const SubgroupRef& h, const ReducibleIdeal& ideal,
                     const TheoryOptions& options) {
  const FullInterval interval = full_interval(g, h, options.interval_cap);
  std::unordered_map<BitSet, bool, BitSetHash> in_hat;
  for (const auto& k : ideal.hat_members) in_hat.emplace(k.members(), true);
  long long outside = 0;
  for (std::size_t i = 0; i < interval.groups.size(); ++i) {
    if (i == interval.top) continue;
    if (!in_hat.count(interval.groups[i].members())) outside += interval.mu[i];
  }
  return interval.mu[interval.top] - ideal.mu_hat() + outside;
}

}  // namespace mobius
