#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mobius/bitset.hpp"
#include "mobius/error.hpp"

namespace mobius {

/// A finite poset stored with its full order relation: `up(x)` holds every y
/// with x <= y and `down(y)` every x with x <= y.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Throws NotAPoset unless `leq` is reflexive, antisymmetric and transitive.
  static FinitePoset from_relation(std::vector<std::string> labels,
                                   const std::function<bool(std::size_t, std::size_t)>& leq);
  /// Reflexive-transitive closure of the given strict relations. Throws
  /// NotAPoset on a cycle.
  static FinitePoset from_covers(std::vector<std::string> labels,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& less);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool leq(std::size_t x, std::size_t y) const noexcept { return up_[x].test(y); }
  bool less(std::size_t x, std::size_t y) const noexcept { return x != y && up_[x].test(y); }
  const BitSet& up(std::size_t x) const noexcept { return up_[x]; }
  const BitSet& down(std::size_t x) const noexcept { return down_[x]; }

  /// Elements ordered so that x < y implies x comes first.
  const std::vector<std::size_t>& linear_extension() const noexcept { return linear_; }

  /// Pairs (x, y) with y covering x, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  std::optional<std::size_t> minimum() const;
  std::optional<std::size_t> maximum() const;

  /// Sub-poset on `subset`, relabelled 0..k-1 in the given order.
  FinitePoset induced(const std::vector<std::size_t>& subset) const;

  /// Plain-text dump: one "index label" line per element, then one
  /// "x < y" line per cover pair.
  std::string dump() const;

 private:
  void finalize();

  std::vector<std::string> labels_;
  std::vector<BitSet> up_;
  std::vector<BitSet> down_;
  std::vector<std::size_t> linear_;
};

/// mu(x, y) for every ordered pair.
class MobiusTable {
 public:
  explicit MobiusTable(std::size_t n) : n_(n), mu_(n * n, 0) {}
  long long operator()(std::size_t x, std::size_t y) const noexcept { return mu_[x * n_ + y]; }
  long long& at(std::size_t x, std::size_t y) noexcept { return mu_[x * n_ + y]; }
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<long long> mu_;
};

/// Interval recursion: mu(x,x) = 1 and sum_{x <= t <= y} mu(x,t) = 0.
MobiusTable mobius(const FinitePoset& poset);
/// The single row mu(x, .) of the same recursion.
std::vector<long long> mobius_from(const FinitePoset& poset, std::size_t x);

/// {s : s <= a for some a in A}, sorted.
std::vector<std::size_t> order_ideal_generated(const FinitePoset& poset,
                                               const std::vector<std::size_t>& generators);

struct BoundedPoset {
  FinitePoset poset;
  std::size_t bottom = 0;
  std::size_t top = 0;
};

/// Adds a new least and greatest element. With `reuse_existing`, an existing
/// minimum or maximum plays that role instead. New elements are appended, the
/// bottom before the top.
BoundedPoset adjoin_bounds(const FinitePoset& poset, bool reuse_existing = false);

/// Elements covered by the top.
std::vector<std::size_t> coatoms(const BoundedPoset& bp);

/// Greatest common lower bound, if unique.
std::optional<std::size_t> meet(const FinitePoset& poset, std::size_t a, std::size_t b);

/// Every pair has a meet and a join.
bool is_lattice(const FinitePoset& poset);

/// Sum of (-1)^|Y| over nonempty Y in X whose meet is the bottom. The
/// preconditions of the crosscut theorem are validated: a lattice with
/// bottom != top, every coatom in X and the top not in X.
long long crosscut_sum(const BoundedPoset& lattice, const std::vector<std::size_t>& x,
                       std::size_t max_powerset = 22);

}  // namespace mobius
