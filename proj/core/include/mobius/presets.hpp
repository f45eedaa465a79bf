#pragma once

#include <string>
#include <vector>

#include "mobius/linalg.hpp"

namespace mobius {

/// Elementary transvection I + a E_{ij}.
Matrix transvection(const FieldPtr& field, std::size_t n, std::size_t i, std::size_t j, Scalar a);

/// Generators for the named classical group:
///
///   SL(n,q): I + w^k E_{i,i+1} and I + w^k E_{i+1,i} for every i and
///            k = 0..u-1, where w is the field's primitive element. Over
///            GF(p^u) the w^k span the field additively, so these give every
///            elementary transvection.
///   GL(n,q): the SL generators plus diag(w, 1, ..., 1).
///
/// Throws InvalidArgument for an unknown name.
std::vector<Matrix> preset_generators(const std::string& name, const FieldPtr& field, std::size_t n);

/// `block` in the top-left corner of an n x n identity.
Matrix embed_block(const Matrix& block, std::size_t n);

/// Generators of GL(m,q) (+) I_{n-m}.
std::vector<Matrix> gl_block_generators(const FieldPtr& field, std::size_t n, std::size_t m);

}  // namespace mobius
