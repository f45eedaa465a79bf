#include "config.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace mobius::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& what) { throw ExitError(kExitConfig, what); }

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    config_error(path + ": " + e.what());
  }
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint32_t q) {
  if (q < 2) config_error("--q must be at least 2");
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p) continue;
    std::uint32_t u = 0, rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++u;
    }
    if (rest != 1) config_error("--q " + std::to_string(q) + " is not a prime power");
    return {p, u};
  }
  config_error("--q is not a prime power");
}

std::vector<Matrix> generator_list(const GroupSet& g, const json& j) {
  if (!j.is_array()) config_error("subgroup generators must be a list of matrices");
  std::vector<Matrix> gens;
  for (const auto& m : j) {
    Matrix x = matrix_from_json(g.field(), m);
    if (x.rows() != g.dim() || x.cols() != g.dim()) config_error("subgroup generator has the wrong size");
    gens.push_back(std::move(x));
  }
  return gens;
}

}  // namespace

GroupSpec resolve_group_spec(const GroupSource& source) {
  try {
    if (!source.gens_file.empty()) {
      if (!source.preset.empty()) config_error("--preset and --gens are mutually exclusive");
      return group_spec_from_json(read_json_file(source.gens_file));
    }
    if (source.preset.empty()) config_error("one of --preset or --gens is required");
    if (source.n == 0) config_error("--n is required with --preset");
    std::uint32_t p = 0, u = source.u;
    if (source.q) {
      std::tie(p, u) = split_prime_power(*source.q);
      if (source.p && *source.p != p) config_error("--p disagrees with --q");
    } else if (source.p) {
      p = *source.p;
    } else {
      config_error("--q or --p is required with --preset");
    }
    std::optional<std::vector<std::uint32_t>> modulus;
    if (!source.modulus.empty()) modulus = source.modulus;
    return preset_spec(source.preset, FqField::make(p, u, modulus), source.n);
  } catch (const Error& e) {
    config_error(e.what());
  }
}

std::string spec_hash(const GroupSpec& spec) {
  json j = group_spec_to_json(spec);
  j.erase("name");
  return hex(fnv1a(j.dump()));
}

GroupPtr load_group(const GroupSpec& spec, const GroupOptions& options, std::ostream& warn) {
  const char* dir = std::getenv("MOBIUS_LATTICE_CACHE");
  fs::path file;
  if (dir && *dir) {
    file = fs::path(dir) / ("group-" + spec_hash(spec) + ".json");
    std::ifstream in(file);
    if (in) {
      try {
        const json j = json::parse(in);
        std::vector<Matrix> elements;
        for (const auto& m : j.at("elements")) elements.push_back(matrix_from_json(spec.field, m));
        return GroupSet::from_listing(spec.field, spec.n, spec.generators, std::move(elements), options);
      } catch (const std::exception& e) {
        if (const auto* err = dynamic_cast<const Error*>(&e); err && is_cap_error(err->code())) throw;
        warn << "warning: ignoring unusable cache entry " << file << ": " << e.what() << "\n";
      }
    }
  }
  GroupPtr g = GroupSet::closure(spec.field, spec.n, spec.generators, options);
  if (!file.empty()) {
    json j = group_spec_to_json(spec);
    json elements = json::array();
    for (const auto& m : g->elements()) elements.push_back(matrix_to_json(m));
    j["elements"] = std::move(elements);
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    const fs::path tmp = file.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump() << "\n";
    }
    fs::rename(tmp, file, ec);
    if (ec) warn << "warning: could not write cache entry " << file << ": " << ec.message() << "\n";
  }
  return g;
}

SubgroupRef parse_subgroup(const GroupSet& g, const std::string& text) {
  if (text == "trivial" || text == "1") return g.trivial();
  if (text == "G") return g.whole();
  json j;
  if (fs::exists(text)) {
    j = read_json_file(text);
  } else {
    try {
      j = json::parse(text);
    } catch (const json::exception&) {
      config_error("subgroup '" + text + "' is neither trivial, G, a file, nor a JSON generator list");
    }
  }
  try {
    return g.generate(generator_list(g, j));
  } catch (const Error& e) {
    config_error(e.what());
  }
}

std::vector<SubgroupRef> read_subgroups_file(const GroupSet& g, const std::string& path) {
  const json j = read_json_file(path);
  if (!j.is_array()) config_error(path + ": expected a list of generator lists");
  std::vector<SubgroupRef> out;
  try {
    for (const auto& entry : j) out.push_back(g.generate(generator_list(g, entry)));
  } catch (const Error& e) {
    config_error(path + ": " + e.what());
  }
  return out;
}

std::string subgroup_key(const SubgroupRef& h) {
  std::string bytes;
  for (ElementId id : h.member_ids()) bytes += std::to_string(id) + ",";
  return hex(fnv1a(bytes));
}

}  // namespace mobius::cli
