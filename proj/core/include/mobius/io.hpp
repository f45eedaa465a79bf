#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mobius/linalg.hpp"

namespace mobius {

// JSON encodings shared by config files and reports.
//
//   field:   {"p": 3, "u": 1} or {"p": 2, "u": 2, "modulus": [1, 1, 1]}
//            (modulus coefficients low degree first)
//   scalar:  the canonical residue for u = 1, a coefficient vector of length
//            u (low degree first) for u > 1
//   matrix:  row-major nested arrays of scalars
//   group:   {"name": "...", "field": {...}, "n": 2, "generators": [m, ...]}
//            or {"preset": "GL" | "SL", "n": 2, "field": {...}}
//
// Malformed input raises InvalidArgument.

nlohmann::json field_to_json(const FqField& field);
FieldPtr field_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const FqField& field, Scalar s);
Scalar scalar_from_json(const FqField& field, const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldPtr& field, const nlohmann::json& j);

struct GroupSpec {
  std::string name;
  FieldPtr field;
  std::size_t n = 0;
  std::vector<Matrix> generators;
};

/// A named preset resolved to explicit generators, e.g. "GL(2,3)".
GroupSpec preset_spec(const std::string& preset, const FieldPtr& field, std::size_t n);

GroupSpec group_spec_from_json(const nlohmann::json& j);
nlohmann::json group_spec_to_json(const GroupSpec& spec);

}  // namespace mobius
