#include "mobius/presets.hpp"

namespace mobius {

Matrix transvection(const FieldPtr& field, std::size_t n, std::size_t i, std::size_t j, Scalar a) {
  Matrix m = Matrix::identity(field, n);
  m(i, j) = field->add(m(i, j), a);
  return m;
}

std::vector<Matrix> preset_generators(const std::string& name, const FieldPtr& field, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "dimension must be positive");
  if (name != "GL" && name != "SL") throw Error(Errc::InvalidArgument, "unknown preset '" + name + "'");
  std::vector<Matrix> gens;
  const Scalar w = field->primitive_element();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::uint32_t k = 0; k < field->u(); ++k) {
      const Scalar a = field->pow(w, k);
      gens.push_back(transvection(field, n, i, i + 1, a));
      gens.push_back(transvection(field, n, i + 1, i, a));
    }
  if (name == "GL" && field->q() > 2) {
    Matrix d = Matrix::identity(field, n);
    d(0, 0) = w;
    gens.push_back(std::move(d));
  }
  return gens;
}

Matrix embed_block(const Matrix& block, std::size_t n) {
  if (block.rows() != block.cols() || block.rows() > n)
    throw Error(Errc::DimensionMismatch, "block does not fit");
  Matrix m = Matrix::identity(block.field(), n);
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) m(i, j) = block(i, j);
  return m;
}

std::vector<Matrix> gl_block_generators(const FieldPtr& field, std::size_t n, std::size_t m) {
  std::vector<Matrix> out;
  for (const Matrix& g : preset_generators("GL", field, m)) out.push_back(embed_block(g, n));
  return out;
}

}  // namespace mobius
