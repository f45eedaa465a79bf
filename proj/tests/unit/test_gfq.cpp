#include <doctest.h>

#include <set>

#include "mobius/gfq.hpp"

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

}  // namespace

TEST_CASE("prime field construction") {
  auto f = FqField::make(3);
  CHECK(f->q() == 3);
  CHECK(f->u() == 1);
  CHECK(f->name() == "GF(3)");
  CHECK(f->contains(2));
  CHECK_FALSE(f->contains(3));
}

TEST_CASE("field construction errors") {
  CHECK(code_of([] { FqField::make(4); }) == Errc::NonPrimeCharacteristic);
  CHECK(code_of([] { FqField::make(1); }) == Errc::NonPrimeCharacteristic);
  // x^2 + 1 = (x + 1)^2 over GF(2).
  CHECK(code_of([] { FqField::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}); }) == Errc::ReducibleModulus);
  CHECK(code_of([] { FqField::make(2, 7); }) == Errc::UnsupportedExtension);
}

TEST_CASE("GF(4) from x^2+x+1") {
  // No root in GF(2): 0 -> 1, 1 -> 1.
  CHECK(is_irreducible_mod_p({1, 1, 1}, 2));
  CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));
  auto f = FqField::make(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  const Scalar x = f->from_coefficients({0, 1});
  const Scalar x_plus_1 = f->from_coefficients({1, 1});
  CHECK(f->mul(x, x) == x_plus_1);
  CHECK(f->coefficients(x_plus_1) == std::vector<std::uint32_t>{1, 1});
  CHECK(f->name() == "GF(4)");
}

TEST_CASE("small examples") {
  auto f3 = FqField::make(3);
  CHECK(f3->mul(2, 2) == 1);
  auto f5 = FqField::make(5);
  CHECK(f5->inv(2) == 3);
  CHECK(code_of([&] { f5->inv(0); }) == Errc::DivisionByZero);
}

TEST_CASE("built-in moduli are irreducible") {
  for (auto [p, u] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
    auto m = builtin_modulus(p, u);
    REQUIRE(m.has_value());
    CHECK(m->size() == u + 1);
    CHECK(m->back() == 1);
    CHECK(is_irreducible_mod_p(*m, p));
  }
  CHECK_FALSE(builtin_modulus(2, 6).has_value());
}

namespace {

std::vector<FieldPtr> fields_up_to(unsigned max_q) {
  std::vector<FieldPtr> out;
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u})
    if (p <= max_q) out.push_back(FqField::make(p));
  for (auto [p, u] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
    unsigned q = 1;
    for (unsigned i = 0; i < u; ++i) q *= p;
    if (q <= max_q) out.push_back(FqField::make(p, u));
  }
  return out;
}

}  // namespace

TEST_CASE("field axioms on exhaustive triples, q <= 9") {
  for (const auto& f : fields_up_to(9)) {
    CAPTURE(f->name());
    const Scalar q = f->q();
    for (Scalar a = 0; a < q; ++a) {
      CHECK(f->add(a, 0) == a);
      CHECK(f->mul(a, 1) == a);
      CHECK(f->add(a, f->neg(a)) == 0);
      for (Scalar b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        CHECK(f->sub(f->add(a, b), b) == a);
        for (Scalar c = 0; c < q; ++c) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("inverses and primitive element, q <= 27") {
  for (const auto& f : fields_up_to(27)) {
    CAPTURE(f->name());
    for (Scalar a = 1; a < f->q(); ++a) CHECK(f->mul(a, f->inv(a)) == 1);
    // Powers of the primitive element hit every nonzero element exactly once.
    std::set<Scalar> seen;
    Scalar x = 1;
    for (Scalar k = 0; k + 1 < f->q(); ++k) {
      seen.insert(x);
      x = f->mul(x, f->primitive_element());
    }
    CHECK(x == 1);
    CHECK(seen.size() == f->q() - 1);
    CHECK(f->pow(f->primitive_element(), f->q() - 1) == 1);
    // Smallest generator: nothing below it generates.
    for (Scalar g = 1; g < f->primitive_element(); ++g) {
      std::set<Scalar> powers;
      Scalar y = 1;
      for (Scalar k = 0; k + 1 < f->q(); ++k, y = f->mul(y, g)) powers.insert(y);
      CHECK(powers.size() < f->q() - 1);
    }
  }
}

TEST_CASE("canonical encoding round trip") {
  auto f = FqField::make(3, 2);
  for (Scalar a = 0; a < f->q(); ++a) {
    const auto c = f->coefficients(a);
    CHECK(c.size() == 2);
    CHECK(f->from_coefficients(c) == a);
  }
}

TEST_CASE("FieldElement wrappers") {
  auto f = FqField::make(5);
  FieldElement a(f, 2), b(f, 4);
  CHECK((a + b) == FieldElement(f, 1));
  CHECK((a * b) == FieldElement(f, 3));
  CHECK((a - b) == FieldElement(f, 3));
  CHECK((-a) == FieldElement(f, 3));
  CHECK(inv(a) == FieldElement(f, 3));
  auto g = FqField::make(7);
  CHECK(code_of([&] { (void)(a + FieldElement(g, 1)); }) == Errc::MixedFields);
  CHECK(code_of([&] { (void)inv(FieldElement(f, 0)); }) == Errc::DivisionByZero);
  // Separately built but identical fields mix fine.
  CHECK((a + FieldElement(FqField::make(5), 1)) == FieldElement(f, 3));
}
