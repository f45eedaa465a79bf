#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "groups.hpp"
#include "mobius/group.hpp"
#include "oracles.hpp"

using namespace mobius;
using fixture::mat;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected mobius::Error");
  return Errc::InvalidArgument;
}

std::vector<std::vector<ElementId>> member_lists(const std::vector<SubgroupRef>& subs) {
  std::vector<std::vector<ElementId>> out;
  for (const auto& s : subs) out.push_back(s.member_ids());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("closure examples") {
  auto f2 = FqField::make(2);
  const std::vector<Matrix> id{Matrix::identity(f2, 2)};
  CHECK(GroupSet::closure(f2, 2, id)->order() == 1);
  const std::vector<Matrix> gens{mat(f2, {{1, 1}, {0, 1}}), mat(f2, {{0, 1}, {1, 0}})};
  CHECK(GroupSet::closure(f2, 2, gens)->order() == oracle::gl_order(2, 2));
  CHECK(fixture::classical("GL", 2, 3)->order() == 48);
}

TEST_CASE("preset orders match the product formula") {
  struct Case {
    std::size_t n;
    unsigned p, u;
  };
  for (const Case c : {Case{2, 2, 1}, Case{2, 3, 1}, Case{2, 5, 1}, Case{3, 2, 1}, Case{3, 3, 1}, Case{4, 2, 1},
                       Case{2, 2, 2}, Case{2, 3, 2}, Case{2, 2, 3}}) {
    unsigned q = 1;
    for (unsigned i = 0; i < c.u; ++i) q *= c.p;
    CAPTURE(c.n);
    CAPTURE(q);
    const auto gl = fixture::classical("GL", c.n, c.p, c.u);
    CHECK(gl->order() == oracle::gl_order(q, static_cast<unsigned>(c.n)));
    const auto sl = fixture::classical("SL", c.n, c.p, c.u);
    CHECK(sl->order() == oracle::gl_order(q, static_cast<unsigned>(c.n)) / (q - 1));
  }
}

TEST_CASE("closure errors") {
  auto f3 = FqField::make(3);
  const std::vector<Matrix> singular{mat(f3, {{1, 1}, {1, 1}})};
  CHECK(code_of([&] { GroupSet::closure(f3, 2, singular); }) == Errc::SingularGenerator);
  const auto gens = preset_generators("GL", f3, 2);
  CHECK(code_of([&] { GroupSet::closure(f3, 2, gens, GroupOptions{47, 5000}); }) == Errc::OrderCapExceeded);
  CHECK(GroupSet::closure(f3, 2, gens, GroupOptions{48, 5000})->order() == 48);
  CHECK(code_of([&] { preset_generators("PSL", f3, 2); }) == Errc::InvalidArgument);
}

TEST_CASE("closure is closed, indexed canonically and has consistent tables") {
  for (const auto& g : {fixture::classical("GL", 2, 3), fixture::classical("GL", 3, 2), fixture::classical("SL", 2, 5)}) {
    REQUIRE(g->order() <= 500);
    CHECK(g->has_product_table());
    CHECK(g->element(g->identity()) == Matrix::identity(g->field(), g->dim()));
    for (ElementId a = 0; a < g->order(); ++a) {
      if (a > 0) CHECK(g->element(a - 1) < g->element(a));
      CHECK(g->find(g->element(a)) == a);
      CHECK(g->element(g->inverse(a)) * g->element(a) == Matrix::identity(g->field(), g->dim()));
      for (ElementId b = 0; b < g->order(); ++b) {
        const auto prod = g->find(g->element(a) * g->element(b));
        REQUIRE(prod.has_value());
        CHECK(g->multiply(a, b) == *prod);
      }
    }
  }
}

TEST_CASE("products without a table agree with the table") {
  auto f3 = FqField::make(3);
  const auto gens = preset_generators("GL", f3, 2);
  const auto with = GroupSet::closure(f3, 2, gens);
  const auto without = GroupSet::closure(f3, 2, gens, GroupOptions{250'000, 10});
  CHECK_FALSE(without->has_product_table());
  CHECK(with->elements() == without->elements());
  for (ElementId a = 0; a < with->order(); ++a)
    for (ElementId b = 0; b < with->order(); ++b) CHECK(with->multiply(a, b) == without->multiply(a, b));
}

TEST_CASE("random product spot check on a larger group") {
  const auto g = fixture::classical("GL", 3, 3);
  CHECK(g->order() == 11232);
  CHECK_FALSE(g->has_product_table());
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g->order() - 1));
  for (int i = 0; i < 10'000; ++i) {
    const ElementId a = pick(rng), b = pick(rng);
    const auto prod = g->find(g->element(a) * g->element(b));
    REQUIRE(prod.has_value());
    CHECK(g->multiply(a, b) == *prod);
  }
}

TEST_CASE("listing round trip") {
  const auto g = fixture::classical("SL", 2, 3);
  const auto gens = g->generator_matrices();
  auto listing = g->elements();
  std::reverse(listing.begin(), listing.end());
  const auto h = GroupSet::from_listing(g->field(), 2, gens, listing);
  CHECK(h->elements() == g->elements());
  listing.pop_back();
  CHECK(code_of([&] { GroupSet::from_listing(g->field(), 2, gens, listing); }) == Errc::InvalidArgument);
  auto dup = g->elements();
  dup.push_back(dup.front());
  CHECK(code_of([&] { GroupSet::from_listing(g->field(), 2, gens, dup); }) == Errc::InvalidArgument);
}

TEST_CASE("determinism under generator permutation") {
  auto f3 = FqField::make(3);
  auto gens = preset_generators("GL", f3, 2);
  const auto a = GroupSet::closure(f3, 2, gens);
  std::reverse(gens.begin(), gens.end());
  const auto b = GroupSet::closure(f3, 2, gens);
  CHECK(a->elements() == b->elements());
  CHECK(overgroup_interval(*a, a->trivial()).size() == overgroup_interval(*b, b->trivial()).size());
  CHECK(member_lists(overgroup_interval(*a, a->trivial())) == member_lists(overgroup_interval(*b, b->trivial())));
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(*fixture::classical("GL", 2, 2)));
  CHECK(is_irreducible(*fixture::classical("SL", 2, 3)));
  CHECK(is_irreducible(*fixture::classical("GL", 3, 2)));
  const auto g = fixture::classical("GL", 2, 3);
  const auto torus = GroupSet::promote(fixture::first_coordinate_torus(*g));
  CHECK_FALSE(is_irreducible(*torus));
  const auto f2 = FqField::make(2);
  const std::vector<Matrix> id{Matrix::identity(f2, 2)};
  CHECK_FALSE(is_irreducible(*GroupSet::closure(f2, 2, id)));
}

TEST_CASE("stabilizer examples") {
  const auto g22 = fixture::classical("GL", 2, 2);
  const auto f2 = g22->field();
  CHECK(stabilizer(*g22, Subspace::whole(f2, 2)) == g22->whole());
  const SubgroupRef s = stabilizer(*g22, Subspace::span(mat(f2, {{1, 0}})));
  CHECK(s.order() == 2);
  CHECK(s.contains(*g22->find(mat(f2, {{1, 0}, {1, 1}}))));
  CHECK(s.contains(g22->identity()));

  const auto g23 = fixture::classical("GL", 2, 3);
  const auto f3 = g23->field();
  const SubgroupRef t = stabilizer(*g23, Subspace::span(mat(f3, {{1, 0}})));
  CHECK(t.order() == 12);
  // (1,0) g = first row of g, so the stabilizer is the lower-triangular group.
  t.members().for_each([&](std::size_t e) { CHECK(g23->element(static_cast<ElementId>(e))(0, 1) == 0); });
  CHECK(code_of([&] { stabilizer(*g23, Subspace::whole(f3, 3)); }) == Errc::AmbientMismatch);
}

TEST_CASE("stabilizers agree with brute force and are subgroups") {
  const auto g = fixture::classical("GL", 3, 2);
  for (const auto& w : enumerate_subspaces(g->field(), 3)) {
    const SubgroupRef s = stabilizer(*g, w);
    for (ElementId e = 0; e < g->order(); ++e) CHECK(s.contains(e) == (w.image(g->element(e)) == w));
    CHECK(s.contains(g->identity()));
    CHECK(g->subgroup_from_members(s.members()) == s);
  }
}

TEST_CASE("overgroup interval examples") {
  const auto g = fixture::classical("GL", 2, 2);
  CHECK(overgroup_interval(*g, g->whole()).size() == 1);
  const auto all = overgroup_interval(*g, g->trivial());
  REQUIRE(all.size() == 6);
  std::vector<std::size_t> orders;
  for (const auto& k : all) orders.push_back(k.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});

  const auto closed = oracle::subgroups_by_subset_closure(*g);
  std::vector<std::vector<ElementId>> brute(closed.begin(), closed.end());
  std::sort(brute.begin(), brute.end());
  CHECK(member_lists(all) == brute);

  const SubgroupRef c3 = all[4];
  const auto above = overgroup_interval(*g, c3);
  REQUIRE(above.size() == 2);
  CHECK(above[0] == c3);
  CHECK(above[1] == g->whole());
  CHECK(code_of([&] { overgroup_interval(*g, g->trivial(), 5); }) == Errc::IntervalTooLarge);
}

TEST_CASE("overgroup interval properties") {
  const auto g = fixture::classical("SL", 2, 3);
  const auto all = overgroup_interval(*g, g->trivial());
  // SL(2,3) has 15 subgroups: 1, Z2, four C3, three C4, Q8, four C6, itself.
  CHECK(all.size() == 15);
  for (const auto& h : all) {
    const auto above = overgroup_interval(*g, h);
    std::size_t expected = 0;
    for (const auto& k : all)
      if (h.is_subgroup_of(k)) ++expected;
    CHECK(above.size() == expected);
    for (std::size_t i = 0; i < above.size(); ++i) {
      CHECK(h.is_subgroup_of(above[i]));
      if (i) CHECK(above[i - 1] < above[i]);
    }
  }
}

TEST_CASE("generate, extend and subgroup_from_members") {
  const auto g = fixture::classical("GL", 2, 3);
  const SubgroupRef t = fixture::first_coordinate_torus(*g);
  CHECK(t.order() == 2);
  for (ElementId e = 0; e < g->order(); e += 7) {
    const SubgroupRef ext = g->extend(t, e);
    std::vector<ElementId> gens = t.generators();
    gens.push_back(e);
    CHECK(ext == g->generate(gens));
    CHECK(t.is_subgroup_of(ext));
    CHECK(ext.contains(e));
  }
  ElementId order3 = g->identity();
  for (ElementId e = 0; e < g->order(); ++e)
    if (e != g->identity() && g->multiply(e, g->multiply(e, e)) == g->identity()) order3 = e;
  REQUIRE(order3 != g->identity());
  BitSet not_closed(g->order());
  not_closed.set(g->identity());
  not_closed.set(order3);
  CHECK(code_of([&] { g->subgroup_from_members(not_closed); }) == Errc::NotASubgroup);
  const auto f3 = g->field();
  const std::vector<Matrix> outside{mat(f3, {{1, 1}, {1, 1}})};
  CHECK(code_of([&] { g->generate(outside); }) == Errc::NotASubgroup);
}

TEST_CASE("promote and lift") {
  const auto g = fixture::classical("GL", 2, 3);
  const SubgroupRef s = stabilizer(*g, Subspace::span(mat(g->field(), {{1, 0}})));
  const auto m = GroupSet::promote(s);
  CHECK(m->order() == 12);
  CHECK(std::is_sorted(m->parent_index().begin(), m->parent_index().end()));
  for (const auto& k : overgroup_interval(*m, m->trivial())) {
    const SubgroupRef lifted = lift_to_parent(k, g);
    CHECK(lifted.order() == k.order());
    CHECK(lifted.is_subgroup_of(s));
  }
  CHECK(lift_to_parent(m->whole(), g) == s);
  CHECK(intersect(s, g->whole()) == s);
}

TEST_CASE("action from subspaces") {
  const auto g = fixture::classical("GL", 2, 2);
  const auto lines = enumerate_subspaces(g->field(), 2, 1);
  const auto act = action_from_subspaces(g, lines);
  CHECK_FALSE(act.extended);
  CHECK(act.points.size() == 3);
  // Faithful on 3 points: distinct elements give distinct permutations.
  std::set<std::vector<std::uint32_t>> perms;
  for (ElementId e = 0; e < g->order(); ++e) {
    std::vector<std::uint32_t> perm;
    for (std::size_t x = 0; x < 3; ++x) perm.push_back(act.action.image(x, e));
    perms.insert(perm);
  }
  CHECK(perms.size() == 6);

  const auto single = action_from_subspaces(g, {lines[0]});
  CHECK(single.extended);
  CHECK(single.points.size() == 3);

  const auto whole = action_from_subspaces(g, {Subspace::whole(g->field(), 2)});
  CHECK(whole.points.size() == 1);
  CHECK(whole.action.stabilizer(0) == g->whole());

  const auto f2 = g->field();
  const std::vector<Matrix> id{Matrix::identity(f2, 2)};
  const auto trivial = GroupSet::closure(f2, 2, id);
  const auto idact = action_from_subspaces(trivial, lines);
  for (std::size_t x = 0; x < 3; ++x) CHECK(idact.action.image(x, 0) == x);
}

TEST_CASE("action table validation") {
  const auto g = fixture::classical("GL", 2, 2);
  std::vector<std::uint32_t> table(2 * g->order(), 0);
  for (ElementId e = 0; e < g->order(); ++e) table[g->order() + e] = 1;
  CHECK_NOTHROW(GroupAction(g, 2, table));
  table[g->order() + g->identity()] = 0;
  CHECK(code_of([&] { GroupAction(g, 2, table); }) == Errc::InvalidArgument);
}

TEST_CASE("stabilizer alternating sums on action examples") {
  const auto g = fixture::classical("GL", 2, 2);
  const auto act = action_from_subspaces(g, enumerate_subspaces(g->field(), 2, 1));
  const std::vector<std::size_t> none;
  const auto empty = verify_lemma_4_1(act.action, g->trivial(), none);
  CHECK(empty.sum_r == 1);
  CHECK(empty.sum_s == 1);
  CHECK(empty.equal);

  const std::vector<std::size_t> all{0, 1, 2};
  const auto rep = verify_lemma_4_1(act.action, g->trivial(), all);
  CHECK(rep.sum_r == -2);
  CHECK(rep.sum_s == -2);
  CHECK(rep.distinct_stabilizers == 3);
  CHECK(rep.equal);

  // All stabilizers equal T: only the empty family survives.
  const SubgroupRef l0 = act.action.stabilizer(0);
  const std::vector<std::size_t> just0{0};
  const auto same = verify_lemma_4_1(act.action, l0, just0);
  CHECK(same.sum_r == 1);
  CHECK(same.sum_s == 1);

  CHECK(code_of([&] { verify_lemma_4_1(act.action, g->whole(), all); }) == Errc::HypothesisViolated);
  CHECK(code_of([&] { verify_lemma_4_1(act.action, g->trivial(), all, 2); }) == Errc::PowersetTooLarge);
}

TEST_CASE("stabilizer alternating sums on seeded random actions") {
  gen::Rng rng(20240601);
  for (int i = 0; i < 100; ++i) {
    const auto inst = gen::random_lemma41_instance(rng);
    CHECK(inst.group->order() <= 48);
    CHECK(inst.x_prime.size() <= 8);
    const auto rep = verify_lemma_4_1(inst.action.action, inst.t, inst.x_prime);
    CHECK(rep.equal);
    CHECK(rep.sum_r == rep.sum_s);
  }
}

TEST_CASE("alternating powerset sums vanish on nonempty sets") {
  CHECK(oracle::alternating_powerset_sum(0) == 1);
  for (unsigned n = 1; n <= 20; ++n) CHECK(oracle::alternating_powerset_sum(n) == 0);
}
