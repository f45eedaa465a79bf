#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mobius/gfq.hpp"

namespace mobius {

/// Dense row-major matrix over GF(q). Vectors are rows and matrices act on
/// the right: w -> w * g.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldPtr& field() const noexcept { return field_; }

  Scalar operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const noexcept {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  std::vector<std::vector<Scalar>> to_rows() const;

  /// Same dimensions and entries; fields compared structurally.
  friend bool operator==(const Matrix& a, const Matrix& b);
  /// Canonical order: dimensions, then entries lexicographically.
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept;
};

Matrix multiply(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

/// Row vector times matrix.
std::vector<Scalar> vec_mul(std::span<const Scalar> v, const Matrix& m);

/// Reduced row echelon form. Zero rows are kept at the bottom.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Throws SingularElement when `m` is not invertible.
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Subspace of F_q^n stored by its canonical RREF basis (no zero rows), so
/// equality is entry-wise equality of bases.
class Subspace {
 public:
  static Subspace zero(FieldPtr field, std::size_t n);
  static Subspace whole(FieldPtr field, std::size_t n);
  /// Row space of `generators`.
  static Subspace span(const Matrix& generators);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const FieldPtr& field() const noexcept { return basis_.field(); }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  /// W * g, canonicalised.
  Subspace image(const Matrix& g) const;
  /// W * g == W, tested row by row against the canonical basis.
  bool is_invariant_under(const Matrix& g) const;

  std::string to_string() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  /// Dimension first, then basis entries.
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept { return MatrixHash{}(s.basis()); }
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Intersection through annihilators: a ∩ b = (a^⊥ + b^⊥)^⊥.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// {x : <w, x> = 0 for all w in a} under the standard bilinear form.
Subspace annihilator(const Subspace& a);

inline constexpr std::uint64_t kDefaultSubspaceCap = 1'000'000;

/// Every subspace of F_q^n (of dimension k when given) exactly once, sorted
/// by dimension and then by canonical basis. Throws TooManySubspaces when the
/// count would exceed `cap`.
std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, std::size_t n,
                                          std::optional<std::size_t> k = std::nullopt,
                                          std::uint64_t cap = kDefaultSubspaceCap);

/// Subspaces satisfying a membership predicate, ordered as enumerated.
struct SubspaceLattice {
  FieldPtr field;
  std::size_t n = 0;
  std::vector<Subspace> elements;

  std::optional<std::size_t> index_of(const Subspace& w) const;
};

/// Subspaces W with W h = W for every h in `group`. Passing generators is
/// enough. With `proper_nontrivial` the zero space and V are dropped.
SubspaceLattice invariant_subspaces(const FieldPtr& field, std::size_t n,
                                    std::span<const Matrix> group, bool proper_nontrivial,
                                    std::uint64_t cap = kDefaultSubspaceCap);

}  // namespace mobius
