#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "mobius/presets.hpp"

namespace gen {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

mobius::FinitePoset random_poset(Rng& rng, std::size_t max_size) {
  const std::size_t n = uniform(rng, 0, max_size);
  const double density = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) less.emplace_back(perm[i], perm[j]);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return mobius::FinitePoset::from_covers(std::move(labels), less);
}

mobius::FinitePoset random_lattice(Rng& rng, std::size_t max_size) {
  for (;;) {
    const unsigned k = static_cast<unsigned>(uniform(rng, 1, 4));
    const unsigned full = (1U << k) - 1;
    std::set<unsigned> family{full};
    const std::size_t picks = uniform(rng, 1, max_size);
    for (std::size_t i = 0; i < picks; ++i) family.insert(static_cast<unsigned>(uniform(rng, 0, full)));
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<unsigned> cur(family.begin(), family.end());
      for (unsigned a : cur)
        for (unsigned b : cur) grew |= family.insert(a & b).second;
    }
    if (family.size() < 2 || family.size() > max_size) continue;
    std::vector<unsigned> sets(family.begin(), family.end());
    std::shuffle(sets.begin(), sets.end(), rng);
    std::vector<std::string> labels;
    for (unsigned s : sets) labels.push_back("s" + std::to_string(s));
    return mobius::FinitePoset::from_relation(
        std::move(labels), [&](std::size_t x, std::size_t y) { return (sets[x] & ~sets[y]) == 0; });
  }
}

mobius::FinitePoset divisor_lattice(unsigned n) {
  std::vector<unsigned> divs;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<std::string> labels;
  for (unsigned d : divs) labels.push_back(std::to_string(d));
  return mobius::FinitePoset::from_relation(
      std::move(labels), [&](std::size_t x, std::size_t y) { return divs[y] % divs[x] == 0; });
}

Lemma41Instance random_lemma41_instance(Rng& rng, std::size_t max_x) {
  using namespace mobius;
  struct Base {
    unsigned p;
    std::size_t n;
    const char* preset;
  };
  static const Base bases[] = {{2, 2, "GL"}, {3, 2, "GL"}, {3, 2, "SL"}, {5, 2, "SL"}, {2, 3, "GL"}};
  const Base& base = bases[uniform(rng, 0, std::size(bases) - 1)];
  const FieldPtr field = FqField::make(base.p);
  const auto ambient = GroupSet::closure(field, base.n, preset_generators(base.preset, field, base.n));

  // A random subgroup of order <= 48, promoted to a group of its own.
  GroupPtr group;
  for (;;) {
    std::vector<ElementId> gens;
    const std::size_t count = uniform(rng, 1, 2);
    for (std::size_t i = 0; i < count; ++i)
      gens.push_back(static_cast<ElementId>(uniform(rng, 0, ambient->order() - 1)));
    const SubgroupRef sub = ambient->generate(gens);
    if (sub.order() <= 48) {
      group = GroupSet::promote(sub);
      break;
    }
  }

  const auto all = enumerate_subspaces(field, base.n);
  std::vector<Subspace> seeds;
  const std::size_t nseeds = uniform(rng, 1, 3);
  for (std::size_t i = 0; i < nseeds; ++i) {
    const Subspace& w = all[uniform(rng, 0, all.size() - 1)];
    if (std::find(seeds.begin(), seeds.end(), w) == seeds.end()) seeds.push_back(w);
  }
  SubspaceAction action = action_from_subspaces(group, seeds);

  std::vector<std::size_t> points(action.points.size());
  std::iota(points.begin(), points.end(), 0);
  std::shuffle(points.begin(), points.end(), rng);
  points.resize(uniform(rng, 0, std::min(max_x, points.size())));
  std::sort(points.begin(), points.end());

  BitSet common(group->order());
  for (ElementId g = 0; g < group->order(); ++g) common.set(g);
  for (std::size_t x : points) common &= action.action.stabilizer(x).members();
  const auto candidates = common.indices();
  std::vector<ElementId> tgens;
  const std::size_t tcount = uniform(rng, 0, 2);
  for (std::size_t i = 0; i < tcount; ++i)
    tgens.push_back(static_cast<ElementId>(candidates[uniform(rng, 0, candidates.size() - 1)]));
  SubgroupRef t = group->generate(tgens);
  return Lemma41Instance{group, std::move(action), std::move(points), std::move(t)};
}

}  // namespace gen
