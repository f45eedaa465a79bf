#include "mobius/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mobius {

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels,
                                       const std::function<bool(std::size_t, std::size_t)>& leq) {
  FinitePoset p;
  const std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  p.up_.assign(n, BitSet(n));
  p.down_.assign(n, BitSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq(x, y)) {
        p.up_[x].set(y);
        p.down_[y].set(x);
      }
  for (std::size_t x = 0; x < n; ++x) {
    if (!p.up_[x].test(x)) throw Error(Errc::NotAPoset, "relation is not reflexive");
    bool ok = true;
    p.up_[x].for_each([&](std::size_t y) {
      if (y != x && p.up_[y].test(x)) ok = false;
      if (!p.up_[y].is_subset_of(p.up_[x])) ok = false;
    });
    if (!ok) throw Error(Errc::NotAPoset, "relation is not antisymmetric and transitive");
  }
  p.finalize();
  return p;
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& less) {
  const std::size_t n = labels.size();
  std::vector<BitSet> up(n, BitSet(n));
  for (std::size_t x = 0; x < n; ++x) up[x].set(x);
  for (const auto& [a, b] : less) {
    if (a >= n || b >= n) throw Error(Errc::InvalidArgument, "relation index out of range");
    up[a].set(b);
  }
  // Warshall closure on rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (up[x].test(k)) up[x] |= up[k];
  return from_relation(std::move(labels), [&](std::size_t x, std::size_t y) { return up[x].test(y); });
}

void FinitePoset::finalize() {
  const std::size_t n = labels_.size();
  linear_.resize(n);
  std::iota(linear_.begin(), linear_.end(), std::size_t{0});
  // A strictly larger element has a strictly larger down-set.
  std::stable_sort(linear_.begin(), linear_.end(), [&](std::size_t a, std::size_t b) {
    return down_[a].count() < down_[b].count();
  });
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x)
    up_[x].for_each([&](std::size_t y) {
      if (y != x && (up_[x] & down_[y]).count() == 2) out.emplace_back(x, y);
    });
  return out;
}

std::optional<std::size_t> FinitePoset::minimum() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (up_[x].count() == size()) return x;
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::maximum() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (down_[x].count() == size()) return x;
  return std::nullopt;
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& subset) const {
  std::vector<std::string> labels;
  for (auto s : subset) labels.push_back(labels_.at(s));
  return from_relation(std::move(labels),
                       [&](std::size_t a, std::size_t b) { return leq(subset[a], subset[b]); });
}

std::string FinitePoset::dump() const {
  std::ostringstream out;
  out << "elements " << size() << "\n";
  for (std::size_t x = 0; x < size(); ++x) out << x << " " << labels_[x] << "\n";
  const auto covers = cover_pairs();
  out << "covers " << covers.size() << "\n";
  for (const auto& [a, b] : covers) out << a << " < " << b << "\n";
  return out.str();
}

std::vector<long long> mobius_from(const FinitePoset& poset, std::size_t x) {
  std::vector<long long> mu(poset.size(), 0);
  mu[x] = 1;
  for (std::size_t y : poset.linear_extension()) {
    if (!poset.less(x, y)) continue;
    long long sum = 0;
    (poset.up(x) & poset.down(y)).for_each([&](std::size_t t) {
      if (t != y) sum += mu[t];
    });
    mu[y] = -sum;
  }
  return mu;
}

MobiusTable mobius(const FinitePoset& poset) {
  MobiusTable table(poset.size());
  for (std::size_t x = 0; x < poset.size(); ++x) {
    const auto row = mobius_from(poset, x);
    for (std::size_t y = 0; y < poset.size(); ++y) table.at(x, y) = row[y];
  }
  return table;
}

std::vector<std::size_t> order_ideal_generated(const FinitePoset& poset,
                                               const std::vector<std::size_t>& generators) {
  BitSet ideal(poset.size());
  for (auto a : generators) {
    if (a >= poset.size()) throw Error(Errc::InvalidArgument, "generator outside the poset");
    ideal |= poset.down(a);
  }
  return ideal.indices();
}

BoundedPoset adjoin_bounds(const FinitePoset& poset, bool reuse_existing) {
  const std::size_t n = poset.size();
  std::optional<std::size_t> min, max;
  if (reuse_existing && n > 0) {
    min = poset.minimum();
    max = poset.maximum();
  }
  std::vector<std::string> labels = poset.labels();
  const std::size_t bottom = min ? *min : labels.size();
  if (!min) labels.emplace_back("^0");
  const std::size_t top = max ? *max : labels.size();
  if (!max) labels.emplace_back("^1");
  auto leq = [&](std::size_t a, std::size_t b) {
    if (a == b || a == bottom || b == top) return true;
    if (a == top || b == bottom) return false;
    return poset.leq(a, b);
  };
  return BoundedPoset{FinitePoset::from_relation(std::move(labels), leq), bottom, top};
}

std::vector<std::size_t> coatoms(const BoundedPoset& bp) {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : bp.poset.cover_pairs())
    if (b == bp.top) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> meet(const FinitePoset& poset, std::size_t a, std::size_t b) {
  const BitSet common = poset.down(a) & poset.down(b);
  std::optional<std::size_t> best;
  common.for_each([&](std::size_t t) {
    if (common.is_subset_of(poset.down(t))) best = t;
  });
  return best;
}

namespace {
std::optional<std::size_t> join(const FinitePoset& poset, std::size_t a, std::size_t b) {
  const BitSet common = poset.up(a) & poset.up(b);
  std::optional<std::size_t> best;
  common.for_each([&](std::size_t t) {
    if (common.is_subset_of(poset.up(t))) best = t;
  });
  return best;
}
}  // namespace

bool is_lattice(const FinitePoset& poset) {
  for (std::size_t a = 0; a < poset.size(); ++a)
    for (std::size_t b = a + 1; b < poset.size(); ++b)
      if (!meet(poset, a, b) || !join(poset, a, b)) return false;
  return true;
}

long long crosscut_sum(const BoundedPoset& lattice, const std::vector<std::size_t>& x,
                       std::size_t max_powerset) {
  const FinitePoset& p = lattice.poset;
  if (lattice.bottom == lattice.top) throw Error(Errc::NotALattice, "bottom equals top");
  if (!is_lattice(p)) throw Error(Errc::NotALattice, "some pair lacks a meet or join");
  if (std::find(x.begin(), x.end(), lattice.top) != x.end())
    throw Error(Errc::TopInX, "the top element may not be in X");
  for (auto c : coatoms(lattice))
    if (std::find(x.begin(), x.end(), c) == x.end())
      throw Error(Errc::CoatomsNotCovered, "coatom " + p.label(c) + " missing from X");
  if (x.size() > max_powerset)
    throw Error(Errc::PowersetTooLarge, "|X| exceeds " + std::to_string(max_powerset));

  const std::size_t n = p.size();
  std::vector<std::size_t> meet_table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) meet_table[a * n + b] = *meet(p, a, b);

  long long total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << x.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::size_t m = lattice.top;
    int size = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (mask >> i & 1U) {
        m = meet_table[m * n + x[i]];
        ++size;
      }
    if (m == lattice.bottom) total += (size % 2 == 0) ? 1 : -1;
  }
  return total;
}

}  // namespace mobius
