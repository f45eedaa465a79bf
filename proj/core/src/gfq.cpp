#include "mobius/gfq.hpp"

#include <algorithm>
#include <sstream>

namespace mobius {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

constexpr std::uint32_t kMaxExtensionOrder = 1024;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero b over GF(p).
Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  trim(out);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  if (degree == 1) return true;
  // Every monic divisor candidate of degree d, encoded as its low coefficients.
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p, std::uint32_t u) {
  if (p == 2 && u == 2) return Poly{1, 1, 1};        // x^2 + x + 1
  if (p == 2 && u == 3) return Poly{1, 1, 0, 1};     // x^3 + x + 1
  if (p == 2 && u == 4) return Poly{1, 1, 0, 0, 1};  // x^4 + x + 1
  if (p == 3 && u == 2) return Poly{2, 2, 1};        // x^2 + 2x + 2
  if (p == 3 && u == 3) return Poly{1, 2, 0, 1};     // x^3 + 2x + 1
  if (p == 5 && u == 2) return Poly{2, 4, 1};        // x^2 + 4x + 2
  return std::nullopt;
}

FieldPtr FqField::make(std::uint32_t p, std::uint32_t u,
                       std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (u == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < u; ++i) {
    q *= p;
    if (q > (std::uint64_t{1} << 31)) throw Error(Errc::UnsupportedExtension, "field too large");
  }

  std::shared_ptr<FqField> f(new FqField());
  f->p_ = p;
  f->u_ = u;
  f->q_ = static_cast<std::uint32_t>(q);

  if (u > 1) {
    if (q > kMaxExtensionOrder)
      throw Error(Errc::UnsupportedExtension, "extension fields limited to q <= 1024");
    if (!modulus) modulus = builtin_modulus(p, u);
    if (!modulus)
      throw Error(Errc::UnsupportedExtension,
                  "no built-in modulus for GF(" + std::to_string(q) + "); supply one");
    Poly m = *modulus;
    for (auto& c : m) c %= p;
    trim(m);
    if (m.size() != u + 1)
      throw Error(Errc::ReducibleModulus, "modulus must have degree " + std::to_string(u));
    if (!is_irreducible_mod_p(m, p)) throw Error(Errc::ReducibleModulus, "modulus is reducible");
    const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
    for (auto& c : m) c = static_cast<std::uint32_t>(std::uint64_t{c} * lead_inv % p);
    f->modulus_ = m;

    const std::uint32_t qq = f->q_;
    f->add_table_.resize(std::size_t{qq} * qq);
    f->mul_table_.resize(std::size_t{qq} * qq);
    f->neg_table_.resize(qq);
    std::vector<Poly> polys(qq);
    for (Scalar a = 0; a < qq; ++a) {
      polys[a] = f->coefficients(a);
      Poly n = polys[a];
      for (auto& c : n) c = (p - c) % p;
      f->neg_table_[a] = f->from_coefficients(n);
    }
    for (Scalar a = 0; a < qq; ++a) {
      for (Scalar b = 0; b < qq; ++b) {
        Poly s(u);
        for (std::uint32_t i = 0; i < u; ++i) s[i] = (polys[a][i] + polys[b][i]) % p;
        f->add_table_[std::size_t{a} * qq + b] = f->from_coefficients(s);
        Poly prod = poly_mod(poly_mul(polys[a], polys[b], p), m, p);
        prod.resize(u, 0);
        f->mul_table_[std::size_t{a} * qq + b] = f->from_coefficients(prod);
      }
    }
    f->inv_table_.assign(qq, 0);
    for (Scalar a = 1; a < qq; ++a)
      for (Scalar b = 1; b < qq; ++b)
        if (f->mul_table_[std::size_t{a} * qq + b] == 1) {
          f->inv_table_[a] = b;
          break;
        }
  } else if (modulus && !modulus->empty()) {
    throw Error(Errc::InvalidArgument, "a modulus is only meaningful for u > 1");
  }

  // Smallest element whose powers reach all q - 1 nonzero elements.
  const std::uint64_t group_order = f->q_ - 1;
  std::vector<std::uint64_t> prime_factors;
  {
    std::uint64_t m = group_order;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        prime_factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) prime_factors.push_back(m);
  }
  for (Scalar g = 1; g < f->q_; ++g) {
    bool generator = true;
    for (auto r : prime_factors)
      if (f->pow(g, group_order / r) == 1) {
        generator = false;
        break;
      }
    if (generator) {
      f->primitive_ = g;
      break;
    }
  }
  return f;
}

Scalar FqField::inv(Scalar a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (u_ == 1) return inv_mod_p(a, p_);
  return inv_table_[a];
}

Scalar FqField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = 1;
  Scalar base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> FqField::coefficients(Scalar a) const {
  std::vector<std::uint32_t> c(u_, 0);
  for (std::uint32_t i = 0; i < u_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Scalar FqField::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() > u_) throw Error(Errc::InvalidArgument, "too many coefficients");
  Scalar value = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw Error(Errc::InvalidArgument, "coefficient out of range");
    value = value * p_ + c[i];
  }
  return value;
}

std::string FqField::name() const {
  std::ostringstream out;
  out << "GF(" << q_ << ")";
  return out.str();
}

FieldElement::FieldElement(FieldPtr field, Scalar rep) : field_(std::move(field)), rep_(rep) {
  if (!field_->contains(rep_)) throw Error(Errc::InvalidArgument, "residue out of range");
}

namespace {
const FqField& common_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && !a.field()->same_as(*b.field()))
    throw Error(Errc::MixedFields, a.field()->name() + " vs " + b.field()->name());
  return *a.field();
}
}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
  return {a.field(), common_field(a, b).add(a.rep(), b.rep())};
}
FieldElement sub(const FieldElement& a, const FieldElement& b) {
  return {a.field(), common_field(a, b).sub(a.rep(), b.rep())};
}
FieldElement mul(const FieldElement& a, const FieldElement& b) {
  return {a.field(), common_field(a, b).mul(a.rep(), b.rep())};
}
FieldElement neg(const FieldElement& a) { return {a.field(), a.field()->neg(a.rep())}; }
FieldElement inv(const FieldElement& a) { return {a.field(), a.field()->inv(a.rep())}; }

}  // namespace mobius
