#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mobius/error.hpp"

namespace mobius {

/// Canonical residue of an element of GF(q). For q = p^u the polynomial
/// c_0 + c_1 x + ... + c_{u-1} x^{u-1} is stored as sum c_i p^i, so integer
/// order on `Scalar` is lexicographic order on the coefficient vector read
/// from the highest degree down.
using Scalar = std::uint32_t;

class FqField;
using FieldPtr = std::shared_ptr<const FqField>;

/// Arithmetic context for GF(q), q = p^u. Immutable once built.
///
/// Prime fields use direct residue arithmetic. Extension fields are limited
/// to q <= 1024 and use precomputed addition / multiplication tables.
class FqField {
 public:
  /// Validates `p` and the modulus (coefficients low degree first, length
  /// u + 1). With u > 1 and no modulus, a built-in one is used for
  /// q in {4, 8, 9, 16, 25, 27}.
  static FieldPtr make(std::uint32_t p, std::uint32_t u = 1,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t u() const noexcept { return u_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Monic modulus, low degree first. Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Scalar zero() const noexcept { return 0; }
  Scalar one() const noexcept { return 1; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    if (u_ == 1) return static_cast<Scalar>((std::uint64_t{a} + b) % p_);
    return add_table_[a * q_ + b];
  }
  Scalar neg(Scalar a) const noexcept {
    if (u_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_table_[a];
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    if (u_ == 1) return static_cast<Scalar>((std::uint64_t{a} * b) % p_);
    return mul_table_[a * q_ + b];
  }
  /// Throws DivisionByZero for a = 0.
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;

  /// A generator of the multiplicative group (smallest in canonical order).
  Scalar primitive_element() const noexcept { return primitive_; }

  std::vector<std::uint32_t> coefficients(Scalar a) const;
  Scalar from_coefficients(const std::vector<std::uint32_t>& c) const;

  bool contains(Scalar a) const noexcept { return a < q_; }

  /// Same characteristic, degree and modulus.
  bool same_as(const FqField& other) const noexcept {
    return p_ == other.p_ && u_ == other.u_ && modulus_ == other.modulus_;
  }

  /// "GF(9)" style label.
  std::string name() const;

 private:
  FqField() = default;

  std::uint32_t p_ = 0;
  std::uint32_t u_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Scalar> add_table_;
  std::vector<Scalar> mul_table_;
  std::vector<Scalar> neg_table_;
  std::vector<Scalar> inv_table_;
  Scalar primitive_ = 1;
};

bool is_prime(std::uint64_t n) noexcept;

/// True iff the polynomial (low degree first, leading coefficient nonzero)
/// has no factor of degree 1..deg/2 over GF(p). Trial division; small degrees
/// only.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Built-in modulus for q in {4, 8, 9, 16, 25, 27}, if any.
std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p, std::uint32_t u);

/// An element bundled with its field. Convenience value type for code that
/// mixes elements from different contexts; the matrix code stores bare
/// `Scalar`s against a shared `FieldPtr`.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Scalar rep);

  const FieldPtr& field() const noexcept { return field_; }
  Scalar rep() const noexcept { return rep_; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.rep_ == b.rep_ && a.field_->same_as(*b.field_);
  }

 private:
  FieldPtr field_;
  Scalar rep_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }

}  // namespace mobius
