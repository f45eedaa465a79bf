#include "mobius/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

namespace mobius {

// ---------------------------------------------------------------------------
// SubgroupRef

SubgroupRef::SubgroupRef(GroupPtr parent, BitSet members, std::vector<ElementId> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  order_ = members_.count();
}

std::vector<ElementId> SubgroupRef::member_ids() const {
  std::vector<ElementId> out;
  out.reserve(order_);
  members_.for_each([&](std::size_t i) { out.push_back(static_cast<ElementId>(i)); });
  return out;
}

std::vector<Matrix> SubgroupRef::generator_matrices() const {
  std::vector<Matrix> out;
  for (auto g : generators_) out.push_back(parent_->element(g));
  return out;
}

bool SubgroupRef::is_subgroup_of(const SubgroupRef& other) const {
  return parent_ == other.parent_ && members_.is_subset_of(other.members_);
}

bool operator<(const SubgroupRef& a, const SubgroupRef& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  return a.member_ids() < b.member_ids();
}

// ---------------------------------------------------------------------------
// GroupSet

GroupPtr GroupSet::closure(const FieldPtr& field, std::size_t n, std::span<const Matrix> generators,
                           const GroupOptions& options) {
  for (const Matrix& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw Error(Errc::DimensionMismatch, "generator is not " + std::to_string(n) + "x" + std::to_string(n));
    if (!g.field()->same_as(*field)) throw Error(Errc::MixedFields, "generator over a different field");
    if (!is_invertible(g)) throw Error(Errc::SingularGenerator, "generator is singular");
  }
  std::vector<Matrix> elements{Matrix::identity(field, n)};
  std::unordered_set<Matrix, MatrixHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Matrix& s : generators) {
      Matrix y = mobius::multiply(elements[head], s);
      if (seen.insert(y).second) {
        elements.push_back(std::move(y));
        if (elements.size() > options.order_cap)
          throw Error(Errc::OrderCapExceeded,
                      "group order exceeds cap " + std::to_string(options.order_cap));
      }
    }
  }
  std::shared_ptr<GroupSet> g(new GroupSet());
  g->field_ = field;
  g->n_ = n;
  g->finish(std::move(elements), generators, options);
  return g;
}

GroupPtr GroupSet::from_listing(const FieldPtr& field, std::size_t n,
                                std::span<const Matrix> generators, std::vector<Matrix> elements,
                                const GroupOptions& options) {
  if (elements.size() > options.order_cap)
    throw Error(Errc::OrderCapExceeded, "group order exceeds cap " + std::to_string(options.order_cap));
  std::shared_ptr<GroupSet> g(new GroupSet());
  g->field_ = field;
  g->n_ = n;
  for (const Matrix& m : elements)
    if (m.rows() != n || m.cols() != n || !m.field()->same_as(*field))
      throw Error(Errc::InvalidArgument, "listing element has the wrong shape or field");
  const std::unordered_set<Matrix, MatrixHash> set(elements.begin(), elements.end());
  if (set.size() != elements.size()) throw Error(Errc::InvalidArgument, "listing contains duplicates");
  if (!set.count(Matrix::identity(field, n))) throw Error(Errc::InvalidArgument, "listing lacks identity");
  // Contains I and is closed under right multiplication by the generators, so
  // it contains the generated group; equal order makes it that group.
  for (const Matrix& x : elements)
    for (const Matrix& s : generators)
      if (!set.count(mobius::multiply(x, s))) throw Error(Errc::InvalidArgument, "listing is not closed");
  const GroupPtr fresh = closure(field, n, generators, options);
  if (fresh->order() != elements.size()) throw Error(Errc::InvalidArgument, "listing has the wrong order");
  g->finish(std::move(elements), generators, options);
  return g;
}

void GroupSet::finish(std::vector<Matrix> elements, std::span<const Matrix> generators,
                      const GroupOptions& options) {
  std::sort(elements.begin(), elements.end());
  elements_ = std::move(elements);
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], static_cast<ElementId>(i));

  identity_ = index_.at(Matrix::identity(field_, n_));
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) inverse_[i] = index_.at(mobius::inverse(elements_[i]));
  for (const Matrix& s : generators) {
    const auto id = find(s);
    if (!id) throw Error(Errc::InvalidArgument, "generator missing from element list");
    if (std::find(generators_.begin(), generators_.end(), *id) == generators_.end())
      generators_.push_back(*id);
  }
  const std::size_t order = elements_.size();
  if (order <= options.table_threshold && order <= 65'535) {
    table_.resize(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        table_[a * order + b] = static_cast<std::uint16_t>(index_.at(mobius::multiply(elements_[a], elements_[b])));
  }
}

GroupPtr GroupSet::promote(const SubgroupRef& h, const GroupOptions& options) {
  const GroupSet& parent = *h.parent();
  std::shared_ptr<GroupSet> g(new GroupSet());
  g->field_ = parent.field_;
  g->n_ = parent.n_;
  g->parent_index_ = h.member_ids();
  const std::size_t order = g->parent_index_.size();
  g->elements_.reserve(order);
  for (auto id : g->parent_index_) g->elements_.push_back(parent.element(id));
  g->index_.reserve(order * 2);
  for (std::size_t i = 0; i < order; ++i) g->index_.emplace(g->elements_[i], static_cast<ElementId>(i));

  const auto& map = g->parent_index_;
  auto local = [&](ElementId parent_id) {
    return static_cast<ElementId>(std::lower_bound(map.begin(), map.end(), parent_id) - map.begin());
  };
  g->identity_ = local(parent.identity());
  g->inverse_.resize(order);
  for (std::size_t i = 0; i < order; ++i) g->inverse_[i] = local(parent.inverse(map[i]));
  for (auto s : h.generators()) g->generators_.push_back(local(s));
  if (order <= options.table_threshold && order <= 65'535) {
    g->table_.resize(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        g->table_[a * order + b] = static_cast<std::uint16_t>(local(parent.multiply(map[a], map[b])));
  }
  return g;
}

std::optional<ElementId> GroupSet::find(const Matrix& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId GroupSet::multiply(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[std::size_t{a} * elements_.size() + b];
  return index_.at(mobius::multiply(elements_[a], elements_[b]));
}

std::vector<Matrix> GroupSet::generator_matrices() const {
  std::vector<Matrix> out;
  for (auto g : generators_) out.push_back(elements_[g]);
  return out;
}

SubgroupRef GroupSet::whole() const {
  BitSet all(order());
  for (std::size_t i = 0; i < order(); ++i) all.set(i);
  return SubgroupRef(self(), std::move(all), generators_);
}

SubgroupRef GroupSet::trivial() const {
  BitSet one(order());
  one.set(identity_);
  return SubgroupRef(self(), std::move(one), {});
}

SubgroupRef GroupSet::generate(std::span<const ElementId> generators) const {
  SubgroupRef k = trivial();
  for (auto g : generators) k = extend(k, g);
  return k;
}

SubgroupRef GroupSet::generate(std::span<const Matrix> generators) const {
  std::vector<ElementId> ids;
  for (const Matrix& m : generators) {
    const auto id = find(m);
    if (!id) throw Error(Errc::NotASubgroup, "matrix is not an element of the group");
    ids.push_back(*id);
  }
  return generate(std::span<const ElementId>(ids));
}

SubgroupRef GroupSet::extend(const SubgroupRef& k, ElementId g) const {
  if (k.contains(g)) return k;
  // The result is a union of right cosets K r. A product r s that falls
  // outside the current union starts a new, disjoint coset.
  const std::vector<ElementId> base = k.member_ids();
  std::vector<ElementId> gens = k.generators();
  gens.push_back(g);
  BitSet members = k.members();
  std::vector<ElementId> reps{identity_};
  auto add_coset = [&](ElementId r) {
    for (auto x : base) members.set(multiply(x, r));
    reps.push_back(r);
  };
  add_coset(g);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (auto s : gens) {
      const ElementId y = multiply(reps[i], s);
      if (!members.test(y)) add_coset(y);
    }
  return SubgroupRef(self(), std::move(members), std::move(gens));
}

SubgroupRef GroupSet::subgroup_from_members(const BitSet& members) const {
  if (members.size() != order() || !members.test(identity_))
    throw Error(Errc::NotASubgroup, "member set does not contain the identity");
  SubgroupRef k = trivial();
  bool ok = true;
  members.for_each([&](std::size_t i) {
    if (!ok || k.contains(static_cast<ElementId>(i))) return;
    k = extend(k, static_cast<ElementId>(i));
    if (!k.members().is_subset_of(members)) ok = false;
  });
  if (!ok || !(k.members() == members)) throw Error(Errc::NotASubgroup, "member set is not closed");
  return k;
}

// ---------------------------------------------------------------------------
// Free operations

bool is_irreducible(const GroupSet& g) {
  const auto gens = g.generator_matrices();
  return invariant_subspaces(g.field(), g.dim(), gens, true).elements.empty();
}

SubgroupRef stabilizer(const GroupSet& g, const Subspace& w) {
  if (w.ambient_dim() != g.dim() || !w.field()->same_as(*g.field()))
    throw Error(Errc::AmbientMismatch, "subspace does not live in the group's space");
  BitSet members(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    if (w.is_invariant_under(g.element(static_cast<ElementId>(i)))) members.set(i);
  return g.subgroup_from_members(members);
}

std::vector<SubgroupRef> overgroup_interval(const GroupSet& g, const SubgroupRef& h, std::uint64_t cap) {
  if (h.parent().get() != &g) throw Error(Errc::SubgroupNotContained, "H is not a subgroup of G");
  std::vector<SubgroupRef> found{h};
  std::unordered_map<BitSet, std::size_t, BitSetHash> index{{h.members(), 0}};

  for (std::size_t head = 0; head < found.size(); ++head) {
    const SubgroupRef k = found[head];
    const std::vector<ElementId>& kgens = k.generators();
    BitSet covered = k.members();
    for (ElementId x = 0; x < g.order(); ++x) {
      if (covered.test(x)) continue;
      // <K, y> is the same for every y in K x K; mark that double coset.
      std::vector<ElementId> stack{x};
      covered.set(x);
      while (!stack.empty()) {
        const ElementId y = stack.back();
        stack.pop_back();
        for (auto s : kgens) {
          for (ElementId z : {g.multiply(s, y), g.multiply(y, s)}) {
            if (!covered.test(z)) {
              covered.set(z);
              stack.push_back(z);
            }
          }
        }
      }
      SubgroupRef next = g.extend(k, x);
      if (index.emplace(next.members(), found.size()).second) {
        found.push_back(std::move(next));
        if (found.size() > cap)
          throw Error(Errc::IntervalTooLarge, "overgroup interval exceeds cap " + std::to_string(cap));
      }
    }
  }
  std::vector<std::pair<std::vector<ElementId>, std::size_t>> keys;
  keys.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) keys.emplace_back(found[i].member_ids(), i);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<SubgroupRef> sorted;
  sorted.reserve(found.size());
  for (const auto& key : keys) sorted.push_back(found[key.second]);
  return sorted;
}

SubgroupRef lift_to_parent(const SubgroupRef& k, const GroupPtr& parent) {
  const auto& map = k.parent()->parent_index();
  if (map.empty() || map.back() >= parent->order())
    throw Error(Errc::InvalidArgument, "subgroup does not belong to a promoted group");
  BitSet members(parent->order());
  k.members().for_each([&](std::size_t i) { members.set(map[i]); });
  std::vector<ElementId> gens;
  for (auto g : k.generators()) gens.push_back(map[g]);
  return SubgroupRef(parent, std::move(members), std::move(gens));
}

SubgroupRef intersect(const SubgroupRef& a, const SubgroupRef& b) {
  if (a.parent() != b.parent()) throw Error(Errc::SubgroupNotContained, "subgroups of different groups");
  return a.parent()->subgroup_from_members(a.members() & b.members());
}

// ---------------------------------------------------------------------------
// Actions

GroupAction::GroupAction(GroupPtr group, std::size_t points, std::vector<std::uint32_t> table)
    : group_(std::move(group)), points_(points), table_(std::move(table)) {
  const std::size_t order = group_->order();
  if (table_.size() != points_ * order) throw Error(Errc::InvalidArgument, "action table has wrong size");
  for (auto y : table_)
    if (y >= points_) throw Error(Errc::InvalidArgument, "action table maps outside the point set");
  for (std::size_t x = 0; x < points_; ++x) {
    if (image(x, group_->identity()) != x) throw Error(Errc::InvalidArgument, "identity does not act trivially");
    for (ElementId g = 0; g < order; ++g)
      for (auto s : group_->generators())
        if (image(image(x, g), s) != image(x, group_->multiply(g, s)))
          throw Error(Errc::InvalidArgument, "action table does not respect composition");
  }
}

SubgroupRef GroupAction::stabilizer(std::size_t x) const {
  BitSet members(group_->order());
  for (ElementId g = 0; g < group_->order(); ++g)
    if (image(x, g) == x) members.set(g);
  return group_->subgroup_from_members(members);
}

SubspaceAction action_from_subspaces(const GroupPtr& g, std::vector<Subspace> points) {
  std::unordered_map<Subspace, std::uint32_t, SubspaceHash> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].ambient_dim() != g->dim() || !points[i].field()->same_as(*g->field()))
      throw Error(Errc::AmbientMismatch, "point does not live in the group's space");
    index.emplace(points[i], static_cast<std::uint32_t>(i));
  }
  if (index.size() != points.size()) throw Error(Errc::InvalidArgument, "duplicate points");
  bool extended = false;
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t x = 0; x < points.size(); ++x) {
    std::vector<std::uint32_t> row(g->order());
    for (ElementId e = 0; e < g->order(); ++e) {
      Subspace y = points[x].image(g->element(e));
      auto it = index.find(y);
      if (it == index.end()) {
        extended = true;
        it = index.emplace(y, static_cast<std::uint32_t>(points.size())).first;
        points.push_back(std::move(y));
      }
      row[e] = it->second;
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::uint32_t> table;
  table.reserve(points.size() * g->order());
  for (const auto& row : rows) table.insert(table.end(), row.begin(), row.end());
  const std::size_t count = points.size();
  return SubspaceAction{GroupAction(g, count, std::move(table)), std::move(points), extended};
}

namespace {

// Sum of (-1)^|S| over subsets S of `sets` whose intersection (starting from
// `whole`) differs from `target`.
long long alternating_sum_not_equal(const std::vector<BitSet>& sets, const BitSet& whole,
                                    const BitSet& target) {
  long long total = 0;
  std::function<void(std::size_t, const BitSet&, int)> walk = [&](std::size_t start, const BitSet& cur,
                                                                  int sign) {
    if (!(cur == target)) total += sign;
    for (std::size_t j = start; j < sets.size(); ++j) walk(j + 1, cur & sets[j], -sign);
  };
  walk(0, whole, 1);
  return total;
}

}  // namespace

Lemma41Report verify_lemma_4_1(const GroupAction& action, const SubgroupRef& t,
                               std::span<const std::size_t> x_prime, std::size_t max_powerset) {
  const GroupPtr& l = action.group();
  if (t.parent() != l) throw Error(Errc::SubgroupNotContained, "T is not a subgroup of the acting group");
  if (x_prime.size() > max_powerset)
    throw Error(Errc::PowersetTooLarge, "|X'| exceeds " + std::to_string(max_powerset));

  std::vector<BitSet> point_stabs;
  std::vector<BitSet> distinct;
  std::unordered_set<BitSet, BitSetHash> seen;
  for (auto x : x_prime) {
    if (x >= action.points()) throw Error(Errc::InvalidArgument, "point index out of range");
    BitSet s = action.stabilizer(x).members();
    if (!t.members().is_subset_of(s))
      throw Error(Errc::HypothesisViolated, "T is not contained in the stabilizer of point " + std::to_string(x));
    if (seen.insert(s).second) distinct.push_back(s);
    point_stabs.push_back(std::move(s));
  }
  const BitSet whole = l->whole().members();
  Lemma41Report report;
  report.distinct_stabilizers = distinct.size();
  report.sum_r = alternating_sum_not_equal(distinct, whole, t.members());
  report.sum_s = alternating_sum_not_equal(point_stabs, whole, t.members());
  report.equal = report.sum_r == report.sum_s;
  return report;
}

}  // namespace mobius
