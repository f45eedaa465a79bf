#pragma once

// Seeded random instances for the property suites. Everything is driven by a
// caller-supplied std::mt19937_64, so a fixed seed reproduces the same run.

#include <cstdint>
#include <random>
#include <vector>

#include "mobius/group.hpp"
#include "mobius/poset.hpp"

namespace gen {

using Rng = std::mt19937_64;

/// Transitive closure of a random DAG on n elements (n uniform in
/// [0, max_size]), with element indices shuffled so that index order is not a
/// linear extension.
mobius::FinitePoset random_poset(Rng& rng, std::size_t max_size);

/// A random family of subsets of {0..k-1} closed under intersection, plus the
/// full set. Such a family is a lattice under inclusion. Sizes are kept in
/// [2, max_size].
mobius::FinitePoset random_lattice(Rng& rng, std::size_t max_size);

/// The poset of divisors of n under divisibility.
mobius::FinitePoset divisor_lattice(unsigned n);

struct Lemma41Instance {
  mobius::GroupPtr group;
  mobius::SubspaceAction action;
  std::vector<std::size_t> x_prime;
  mobius::SubgroupRef t;
};

/// A small matrix group (order <= 48) acting on the orbit closure of a few
/// random subspaces, a random X' of at most `max_x` points and a random T
/// inside every stabilizer L_x, x in X'.
Lemma41Instance random_lemma41_instance(Rng& rng, std::size_t max_x = 8);

}  // namespace gen
