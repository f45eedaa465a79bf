#include <doctest.h>

#include "generators.hpp"
#include "mobius/complex.hpp"

using namespace mobius;

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

void check_downward_closed(const SimplicialComplex& c) {
  for (Face f : c.faces()) {
    for (std::size_t v = 0; v < c.vertex_count(); ++v)
      if (f >> v & 1U) CHECK(c.contains(f & ~(Face{1} << v)));
  }
  if (!c.is_empty())
    for (std::size_t v = 0; v < c.vertex_count(); ++v) CHECK(c.contains(Face{1} << v));
}

}  // namespace

TEST_CASE("empty complex and the complex {empty face}") {
  const SimplicialComplex none;
  CHECK(none.is_empty());
  CHECK(euler(none).chi == 0);
  CHECK(euler(none).chi_reduced == 0);
  CHECK(face_alternating_sum(none) == 0);
  CHECK(SimplicialComplex::from_faces({}, {}).is_empty());

  const auto only_empty = SimplicialComplex::from_faces({}, {0});
  CHECK_FALSE(only_empty.is_empty());
  CHECK(only_empty.faces().size() == 1);
  CHECK(euler(only_empty).chi == 0);
  CHECK(euler(only_empty).chi_reduced == -1);
  CHECK(face_alternating_sum(only_empty) == 1);
  CHECK(none.dump() == "empty\n");
}

TEST_CASE("triangle and its boundary") {
  const auto tri = SimplicialComplex::from_faces({"a", "b", "c"}, {0b111});
  CHECK(tri.faces().size() == 8);
  const auto e = euler(tri);
  CHECK(e.face_counts == std::vector<long long>{3, 3, 1});
  CHECK(e.chi == 1);
  CHECK(e.chi_reduced == 0);
  CHECK(face_alternating_sum(tri) == 0);

  const auto boundary = SimplicialComplex::from_faces({"a", "b", "c"}, {0b011, 0b101, 0b110});
  CHECK(euler(boundary).chi == 0);
  CHECK(euler(boundary).chi_reduced == -1);

  const auto points = SimplicialComplex::from_faces({"a", "b", "c"}, {});
  CHECK(euler(points).chi == 3);
  CHECK(euler(points).chi_reduced == 2);
  CHECK(face_alternating_sum(points) == -2);
  CHECK(tri.dump() == "dim -1: {}\ndim 0: {a} {b} {c}\ndim 1: {a,b} {a,c} {b,c}\ndim 2: {a,b,c}\n");
}

TEST_CASE("strict mode") {
  CHECK(code_of([] { SimplicialComplex::from_faces({"a", "b"}, {0b11}, true); }) == Errc::NotDownwardClosed);
  CHECK(code_of([] { SimplicialComplex::from_faces({"a", "b"}, {0, 0b01, 0b11}, true); }) ==
        Errc::NotDownwardClosed);
  CHECK(code_of([] { SimplicialComplex::from_faces({"a"}, {0b01}, true); }) == Errc::NotDownwardClosed);
  const auto ok = SimplicialComplex::from_faces({"a", "b"}, {0, 0b01, 0b10, 0b11}, true);
  CHECK(ok.faces().size() == 4);
  CHECK(code_of([] { SimplicialComplex::from_faces({"a"}, {0b10}); }) == Errc::InvalidArgument);
  CHECK(code_of([] { SimplicialComplex::from_faces(std::vector<std::string>(65, "v"), {}); }) ==
        Errc::TooManyVertices);
}

TEST_CASE("non-strict mode closes downward and adds singletons") {
  const auto c = SimplicialComplex::from_faces({"a", "b", "c", "d"}, {0b0111});
  check_downward_closed(c);
  CHECK(c.contains(0b1000));
  CHECK(c.faces().size() == 9);
  CHECK(euler(c).chi_reduced == 1);
}

TEST_CASE("random complexes are closed and satisfy the alternating-sum identity") {
  gen::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng() % 8;
    std::vector<std::string> vs;
    for (std::size_t v = 0; v < n; ++v) vs.push_back("v" + std::to_string(v));
    std::vector<Face> gens;
    const std::size_t count = rng() % 5;
    for (std::size_t k = 0; k < count && n; ++k) gens.push_back(rng() & ((Face{1} << n) - 1));
    const auto c = SimplicialComplex::from_faces(vs, gens);
    check_downward_closed(c);
    const auto e = euler(c);
    if (!c.is_empty()) {
      CHECK(face_alternating_sum(c) + e.chi == 1);
      CHECK(face_alternating_sum(c) == -e.chi_reduced);
    }
    // Strict construction accepts what the closure produced.
    CHECK(SimplicialComplex::from_faces(vs, c.faces(), true).faces() == c.faces());
  }
}

TEST_CASE("order complex examples") {
  const auto anti = order_complex(FinitePoset::from_covers({"a", "b"}, {}));
  CHECK(anti.faces().size() == 3);
  CHECK(euler(anti).face_counts == std::vector<long long>{2});
  CHECK(euler(anti).chi_reduced == 1);

  const auto two = order_complex(FinitePoset::from_covers({"a", "b"}, {{0, 1}}));
  CHECK(euler(two).face_counts == std::vector<long long>{2, 1});
  CHECK(euler(two).chi_reduced == 0);

  // Poset with no elements: only the empty chain.
  const auto none = order_complex(FinitePoset{});
  CHECK(none.faces().size() == 1);
  CHECK(euler(none).chi_reduced == -1);
}

TEST_CASE("order complex faces are exactly the chains") {
  gen::Rng rng(77);
  for (int i = 0; i < 50; ++i) {
    const auto p = gen::random_poset(rng, 8);
    const auto c = order_complex(p);
    const std::size_t n = p.size();
    for (Face f = 0; f < (Face{1} << n); ++f) {
      bool is_chain = true;
      for (std::size_t a = 0; a < n && is_chain; ++a)
        for (std::size_t b = 0; b < n && is_chain; ++b)
          if ((f >> a & 1U) && (f >> b & 1U) && !p.leq(a, b) && !p.leq(b, a)) is_chain = false;
      CHECK(c.contains(f) == is_chain);
    }
  }
}

TEST_CASE("mobius of the bounded poset equals the reduced Euler characteristic of the order complex") {
  // B2 without its bounds is an antichain of 2.
  const auto anti = FinitePoset::from_covers({"a", "b"}, {});
  const auto b = adjoin_bounds(anti);
  CHECK(mobius::mobius(b.poset)(b.bottom, b.top) == 1);
  CHECK(euler(order_complex(anti)).chi_reduced == 1);

  gen::Rng rng(1618);
  for (int i = 0; i < 100; ++i) {
    const auto p = gen::random_poset(rng, 10);
    const auto hat = adjoin_bounds(p);
    CHECK(mobius::mobius(hat.poset)(hat.bottom, hat.top) == euler(order_complex(p)).chi_reduced);
  }
}
