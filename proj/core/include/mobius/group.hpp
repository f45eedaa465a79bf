#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mobius/bitset.hpp"
#include "mobius/linalg.hpp"

namespace mobius {

using ElementId = std::uint32_t;

class GroupSet;
using GroupPtr = std::shared_ptr<const GroupSet>;

struct GroupOptions {
  std::uint64_t order_cap = 250'000;
  /// Full product table is stored only up to this order; larger groups
  /// recompute products on demand.
  std::uint64_t table_threshold = 5'000;
};

inline constexpr std::uint64_t kDefaultIntervalCap = 100'000;

/// A subgroup of an explicit `GroupSet`, identified by its member bitset over
/// the parent's canonical element indices.
class SubgroupRef {
 public:
  SubgroupRef(GroupPtr parent, BitSet members, std::vector<ElementId> generators);

  const GroupPtr& parent() const noexcept { return parent_; }
  const BitSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(ElementId g) const noexcept { return members_.test(g); }
  /// Sorted member indices.
  std::vector<ElementId> member_ids() const;
  /// A generating set (not necessarily minimal).
  const std::vector<ElementId>& generators() const noexcept { return generators_; }
  std::vector<Matrix> generator_matrices() const;

  bool is_subgroup_of(const SubgroupRef& other) const;

  friend bool operator==(const SubgroupRef& a, const SubgroupRef& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }
  /// Order first, then member indices lexicographically.
  friend bool operator<(const SubgroupRef& a, const SubgroupRef& b);

 private:
  GroupPtr parent_;
  BitSet members_;
  std::vector<ElementId> generators_;
  std::size_t order_ = 0;
};

/// A finite matrix group stored as an explicit, canonically indexed element
/// list. Element i < j iff matrix i precedes matrix j in canonical order, so
/// indices and member sets are reproducible across runs.
class GroupSet : public std::enable_shared_from_this<GroupSet> {
 public:
  /// Breadth-first closure from the identity. Throws SingularGenerator or
  /// OrderCapExceeded.
  static GroupPtr closure(const FieldPtr& field, std::size_t n, std::span<const Matrix> generators,
                          const GroupOptions& options = {});

  /// Rebuilds a group from a previously computed element listing. The listing
  /// is checked for closure under the generators before it is accepted.
  static GroupPtr from_listing(const FieldPtr& field, std::size_t n,
                               std::span<const Matrix> generators, std::vector<Matrix> elements,
                               const GroupOptions& options = {});

  /// `h` as a group in its own right. `parent_index()` maps the new indices
  /// back to `h.parent()` and is increasing.
  static GroupPtr promote(const SubgroupRef& h, const GroupOptions& options = {});

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const Matrix& element(ElementId id) const { return elements_.at(id); }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  std::optional<ElementId> find(const Matrix& m) const;

  ElementId identity() const noexcept { return identity_; }
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const noexcept { return inverse_[a]; }

  const std::vector<ElementId>& generators() const noexcept { return generators_; }
  std::vector<Matrix> generator_matrices() const;
  bool has_product_table() const noexcept { return !table_.empty(); }

  /// Indices into the group this one was promoted from (empty otherwise).
  const std::vector<ElementId>& parent_index() const noexcept { return parent_index_; }

  SubgroupRef whole() const;
  SubgroupRef trivial() const;
  /// Subgroup generated by the given elements.
  SubgroupRef generate(std::span<const ElementId> generators) const;
  /// Throws NotASubgroup if some matrix is not an element of this group.
  SubgroupRef generate(std::span<const Matrix> generators) const;
  /// <K, g>, built coset by coset from K.
  SubgroupRef extend(const SubgroupRef& k, ElementId g) const;
  /// Validates that `members` is closed and finds a generating set. Throws
  /// NotASubgroup otherwise.
  SubgroupRef subgroup_from_members(const BitSet& members) const;

 private:
  GroupSet() = default;
  void finish(std::vector<Matrix> elements, std::span<const Matrix> generators,
              const GroupOptions& options);
  std::shared_ptr<const GroupSet> self() const { return shared_from_this(); }

  FieldPtr field_;
  std::size_t n_ = 0;
  std::vector<Matrix> elements_;
  std::unordered_map<Matrix, ElementId, MatrixHash> index_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint16_t> table_;
  std::vector<ElementId> generators_;
  std::vector<ElementId> parent_index_;
  ElementId identity_ = 0;
};

/// Every proper nontrivial subspace is moved by some element of `g`.
bool is_irreducible(const GroupSet& g);

/// {g in G : W g = W}.
SubgroupRef stabilizer(const GroupSet& g, const Subspace& w);

/// All K with H <= K <= G, each once, sorted by (order, members). Fixed-point
/// closure: every known K is extended by one element per double coset K g K.
std::vector<SubgroupRef> overgroup_interval(const GroupSet& g, const SubgroupRef& h,
                                            std::uint64_t cap = kDefaultIntervalCap);

/// Subgroups of a sub-GroupSet mapped back into the parent's indexing.
SubgroupRef lift_to_parent(const SubgroupRef& k, const GroupPtr& parent);

/// Intersection of two subgroups of the same parent.
SubgroupRef intersect(const SubgroupRef& a, const SubgroupRef& b);

/// A right action of a GroupSet on points 0..n-1, stored as a dense table.
class GroupAction {
 public:
  /// `table[x * order + g]` is x.g. Validated: identity acts trivially and
  /// (x.g).s = x.(g s) for every generator s.
  GroupAction(GroupPtr group, std::size_t points, std::vector<std::uint32_t> table);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t points() const noexcept { return points_; }
  std::uint32_t image(std::size_t x, ElementId g) const noexcept {
    return table_[x * group_->order() + g];
  }
  SubgroupRef stabilizer(std::size_t x) const;

 private:
  GroupPtr group_;
  std::size_t points_;
  std::vector<std::uint32_t> table_;
};

struct SubspaceAction {
  GroupAction action;
  std::vector<Subspace> points;
  /// True if `points` had to be extended to its orbit closure.
  bool extended = false;
};

SubspaceAction action_from_subspaces(const GroupPtr& g, std::vector<Subspace> points);

struct Lemma41Report {
  long long sum_r = 0;  ///< over subsets of the distinct stabilizers
  long long sum_s = 0;  ///< over subsets of X'
  std::size_t distinct_stabilizers = 0;
  bool equal = false;
};

inline constexpr std::size_t kDefaultPowersetBound = 22;

/// Evaluates both sides of the stabilizer-family alternating sum identity by
/// powerset enumeration. Intersection over the empty family is the whole
/// group. Throws HypothesisViolated if T is not in every L_x, x in X'.
Lemma41Report verify_lemma_4_1(const GroupAction& action, const SubgroupRef& t,
                               std::span<const std::size_t> x_prime,
                               std::size_t max_powerset = kDefaultPowersetBound);

}  // namespace mobius
