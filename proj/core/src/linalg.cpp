#include "mobius/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace mobius {

namespace {

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a != b && !a->same_as(*b)) throw Error(Errc::MixedFields, a->name() + " vs " + b->name());
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

// Number of k-dimensional subspaces of F_q^n, saturating at UINT64_MAX.
// q-Pascal rule: [i, j] = [i-1, j-1] + q^j [i-1, j].
std::uint64_t subspace_count(std::uint64_t q, std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> table(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    table[i][0] = 1;
    std::uint64_t qpow = 1;
    for (std::size_t j = 1; j <= i; ++j) {
      qpow = sat_mul(qpow, q);
      const std::uint64_t b = j <= i - 1 ? table[i - 1][j] : 0;
      table[i][j] = sat_add(table[i - 1][j - 1], sat_mul(qpow, b));
    }
  }
  return table[n][k];
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw Error(Errc::DimensionMismatch, "entry count does not match shape");
  for (auto e : entries_)
    if (!field_->contains(e)) throw Error(Errc::InvalidArgument, "entry outside " + field_->name());
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  std::vector<Scalar> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(std::move(field), r, c, std::move(entries));
}

std::vector<std::vector<Scalar>> Matrix::to_rows() const {
  std::vector<std::vector<Scalar>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_ &&
         (a.field_ == b.field_ || a.field_->same_as(*b.field_));
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.entries_ < b.entries_;
}

std::size_t MatrixHash::operator()(const Matrix& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ (m.rows() * 31 + m.cols());
  for (auto e : m.entries()) {
    h ^= e + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "inner dimensions differ");
  const FqField& f = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  return out;
}

std::vector<Scalar> vec_mul(std::span<const Scalar> v, const Matrix& m) {
  if (v.size() != m.rows()) throw Error(Errc::DimensionMismatch, "vector length differs from rows");
  const FqField& f = *m.field();
  std::vector<Scalar> out(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[k], m(k, j)));
  }
  return out;
}

Matrix rref(const Matrix& m) {
  Matrix a = m;
  const FqField& f = *a.field();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(pivot_row, j));
    const Scalar scale = f.inv(a(pivot_row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(pivot_row, j) = f.mul(a(pivot_row, j), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, col) == 0) continue;
      const Scalar factor = f.neg(a(r, col));
      for (std::size_t j = col; j < a.cols(); ++j)
        a(r, j) = f.add(a(r, j), f.mul(factor, a(pivot_row, j)));
    }
    ++pivot_row;
  }
  return a;
}

std::size_t rank(const Matrix& m) {
  const Matrix r = rref(m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    const auto row = r.row(i);
    if (std::any_of(row.begin(), row.end(), [](Scalar x) { return x != 0; })) ++k;
  }
  return k;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::SingularElement, "non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Matrix r = rref(aug);
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (r(i, i) != 1) throw Error(Errc::SingularElement, "matrix is singular");
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  }
  return out;
}

Subspace Subspace::zero(FieldPtr field, std::size_t n) { return Subspace(Matrix(std::move(field), 0, n)); }

Subspace Subspace::whole(FieldPtr field, std::size_t n) {
  return Subspace(Matrix::identity(std::move(field), n));
}

Subspace Subspace::span(const Matrix& generators) {
  const Matrix r = rref(generators);
  std::size_t k = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    const auto row = r.row(i);
    if (std::any_of(row.begin(), row.end(), [](Scalar x) { return x != 0; })) ++k;
  }
  std::vector<Scalar> entries(r.entries().begin(), r.entries().begin() + k * r.cols());
  return Subspace(Matrix(r.field(), k, r.cols(), std::move(entries)));
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw Error(Errc::AmbientMismatch, "vector length differs");
  const FqField& f = *field();
  std::vector<Scalar> rest(v.begin(), v.end());
  // Reduce against the RREF rows; each row clears its own pivot column.
  for (std::size_t i = 0; i < dim(); ++i) {
    const auto b = basis_.row(i);
    std::size_t pivot = 0;
    while (b[pivot] == 0) ++pivot;
    const Scalar c = rest[pivot];
    if (c == 0) continue;
    const Scalar factor = f.neg(c);
    for (std::size_t j = pivot; j < rest.size(); ++j) rest[j] = f.add(rest[j], f.mul(factor, b[j]));
  }
  return std::all_of(rest.begin(), rest.end(), [](Scalar x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw Error(Errc::AmbientMismatch, "ambient dims differ");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::image(const Matrix& g) const {
  if (g.rows() != ambient_dim() || g.cols() != ambient_dim())
    throw Error(Errc::AmbientMismatch, "matrix does not act on this space");
  if (dim() == 0) return *this;
  return span(multiply(basis_, g));
}

bool Subspace::is_invariant_under(const Matrix& g) const {
  if (g.rows() != ambient_dim() || g.cols() != ambient_dim())
    throw Error(Errc::AmbientMismatch, "matrix does not act on this space");
  for (std::size_t i = 0; i < dim(); ++i)
    if (!contains(vec_mul(basis_.row(i), g))) return false;
  return true;
}

std::string Subspace::to_string() const {
  std::ostringstream out;
  out << "<";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out << ",";
    out << "(";
    const auto row = basis_.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << ")";
  }
  out << ">";
  return out.str();
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis_ < b.basis_;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_field(a.field(), b.field());
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::AmbientMismatch, "ambient dims differ");
  std::vector<Scalar> entries = a.basis().entries();
  entries.insert(entries.end(), b.basis().entries().begin(), b.basis().entries().end());
  return Subspace::span(Matrix(a.field(), a.dim() + b.dim(), a.ambient_dim(), std::move(entries)));
}

Subspace annihilator(const Subspace& a) {
  const std::size_t n = a.ambient_dim();
  const FqField& f = *a.field();
  const Matrix& b = a.basis();
  // Null space of the RREF basis: one vector per free column.
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::size_t p = 0;
    while (b(i, p) == 0) ++p;
    pivots.push_back(p);
  }
  std::vector<Scalar> entries;
  std::size_t count = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Scalar> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(b(i, free));
    entries.insert(entries.end(), v.begin(), v.end());
    ++count;
  }
  return Subspace::span(Matrix(a.field(), count, n, std::move(entries)));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_field(a.field(), b.field());
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::AmbientMismatch, "ambient dims differ");
  return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, std::size_t n,
                                          std::optional<std::size_t> k, std::uint64_t cap) {
  if (k && *k > n) throw Error(Errc::InvalidArgument, "subspace dimension exceeds ambient");
  const std::uint32_t q = field->q();
  const std::size_t k_lo = k ? *k : 0;
  const std::size_t k_hi = k ? *k : n;

  std::uint64_t total = 0;
  for (std::size_t d = k_lo; d <= k_hi; ++d) {
    const std::uint64_t c = subspace_count(q, n, d);
    total = (c > cap || total + c > cap) ? cap + 1 : total + c;
  }
  if (total > cap)
    throw Error(Errc::TooManySubspaces, "more than " + std::to_string(cap) + " subspaces");

  std::vector<Subspace> out;
  out.reserve(total);
  for (std::size_t d = k_lo; d <= k_hi; ++d) {
    if (d == 0) {
      out.push_back(Subspace::zero(field, n));
      continue;
    }
    // Pivot column choices in lexicographic order.
    std::vector<std::size_t> pivots(d);
    for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
    std::vector<Subspace> level;
    while (true) {
      // Free slots: row i, column j > pivots[i], j not a pivot column.
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = pivots[i] + 1; j < n; ++j)
          if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) slots.emplace_back(i, j);
      std::vector<Scalar> digits(slots.size(), 0);
      while (true) {
        Matrix m(field, d, n);
        for (std::size_t i = 0; i < d; ++i) m(i, pivots[i]) = 1;
        for (std::size_t s = 0; s < slots.size(); ++s) m(slots[s].first, slots[s].second) = digits[s];
        level.push_back(Subspace::span(m));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
      // Next pivot combination.
      std::size_t i = d;
      while (i > 0 && pivots[i - 1] == n - d + (i - 1)) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::optional<std::size_t> SubspaceLattice::index_of(const Subspace& w) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), w);
  if (it != elements.end() && *it == w) return static_cast<std::size_t>(it - elements.begin());
  // Lattices built with a predicate stay sorted, but tolerate custom orders.
  const auto lin = std::find(elements.begin(), elements.end(), w);
  if (lin == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(lin - elements.begin());
}

SubspaceLattice invariant_subspaces(const FieldPtr& field, std::size_t n,
                                    std::span<const Matrix> group, bool proper_nontrivial,
                                    std::uint64_t cap) {
  for (const Matrix& g : group) {
    require_same_field(field, g.field());
    if (g.rows() != n || g.cols() != n) throw Error(Errc::AmbientMismatch, "matrix is not n x n");
    if (!is_invertible(g)) throw Error(Errc::SingularElement, "group element is singular");
  }
  SubspaceLattice lattice{field, n, {}};
  for (Subspace& w : enumerate_subspaces(field, n, std::nullopt, cap)) {
    if (proper_nontrivial && (w.dim() == 0 || w.dim() == n)) continue;
    const bool invariant =
        std::all_of(group.begin(), group.end(), [&](const Matrix& g) { return w.is_invariant_under(g); });
    if (invariant) lattice.elements.push_back(std::move(w));
  }
  return lattice;
}

}  // namespace mobius
