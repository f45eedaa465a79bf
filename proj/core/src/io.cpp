#include "mobius/io.hpp"

#include "mobius/presets.hpp"

namespace mobius {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::InvalidArgument, what); }

std::uint32_t as_u32(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) malformed(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint32_t>();
}

}  // namespace

json field_to_json(const FqField& field) {
  json j{{"p", field.p()}, {"u", field.u()}};
  if (field.u() > 1) j["modulus"] = field.modulus();
  return j;
}

FieldPtr field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p")) malformed("field spec needs \"p\"");
  const std::uint32_t p = as_u32(j.at("p"), "p");
  const std::uint32_t u = j.contains("u") ? as_u32(j.at("u"), "u") : 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus")) {
    if (!j.at("modulus").is_array()) malformed("modulus must be an array");
    std::vector<std::uint32_t> m;
    for (const auto& c : j.at("modulus")) m.push_back(as_u32(c, "modulus coefficient"));
    modulus = std::move(m);
  }
  return FqField::make(p, u, modulus);
}

json scalar_to_json(const FqField& field, Scalar s) {
  if (field.u() == 1) return s;
  return field.coefficients(s);
}

Scalar scalar_from_json(const FqField& field, const json& j) {
  if (field.u() == 1) {
    const std::uint32_t v = as_u32(j, "matrix entry");
    if (v >= field.p()) malformed("matrix entry " + std::to_string(v) + " is not a canonical residue");
    return v;
  }
  if (!j.is_array() || j.size() != field.u()) malformed("extension field entries are coefficient vectors");
  std::vector<std::uint32_t> c;
  for (const auto& x : j) {
    const std::uint32_t v = as_u32(x, "coefficient");
    if (v >= field.p()) malformed("coefficient out of range");
    c.push_back(v);
  }
  return field.from_coefficients(c);
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(*m.field(), m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const FieldPtr& field, const json& j) {
  if (!j.is_array() || j.empty()) malformed("matrix must be a non-empty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) malformed("matrix rows must be arrays");
    std::vector<Scalar> r;
    for (const auto& e : row) r.push_back(scalar_from_json(*field, e));
    rows.push_back(std::move(r));
  }
  try {
    return Matrix::from_rows(field, rows);
  } catch (const Error& e) {
    malformed(e.what());
  }
}

GroupSpec preset_spec(const std::string& preset, const FieldPtr& field, std::size_t n) {
  GroupSpec spec;
  spec.name = preset + "(" + std::to_string(n) + "," + std::to_string(field->q()) + ")";
  spec.field = field;
  spec.n = n;
  spec.generators = preset_generators(preset, field, n);
  return spec;
}

GroupSpec group_spec_from_json(const json& j) {
  if (!j.is_object()) malformed("group spec must be an object");
  if (!j.contains("field")) malformed("group spec needs \"field\"");
  if (!j.contains("n")) malformed("group spec needs \"n\"");
  const FieldPtr field = field_from_json(j.at("field"));
  const std::size_t n = as_u32(j.at("n"), "n");
  if (n == 0) malformed("n must be positive");
  if (j.contains("preset")) {
    if (!j.at("preset").is_string()) malformed("preset must be a string");
    return preset_spec(j.at("preset").get<std::string>(), field, n);
  }
  if (!j.contains("generators") || !j.at("generators").is_array()) malformed("group spec needs \"generators\"");
  GroupSpec spec;
  spec.field = field;
  spec.n = n;
  spec.name = j.value("name", std::string("custom"));
  for (const auto& g : j.at("generators")) {
    Matrix m = matrix_from_json(field, g);
    if (m.rows() != n || m.cols() != n) malformed("generator is not n x n");
    spec.generators.push_back(std::move(m));
  }
  return spec;
}

json group_spec_to_json(const GroupSpec& spec) {
  json gens = json::array();
  for (const auto& g : spec.generators) gens.push_back(matrix_to_json(g));
  return json{{"name", spec.name}, {"field", field_to_json(*spec.field)}, {"n", spec.n}, {"generators", gens}};
}

}  // namespace mobius
