#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mobius/group.hpp"
#include "mobius/io.hpp"
#include "mobius/theory.hpp"

namespace mobius::cli {

/// Failure with a fixed process exit status.
class ExitError : public std::runtime_error {
 public:
  ExitError(int status, const std::string& what) : std::runtime_error(what), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCap = 3;

enum class Scope { All, Reducible, File };

struct GroupSource {
  std::string preset;     ///< "GL" or "SL" when set
  std::string gens_file;  ///< group spec JSON when set
  std::size_t n = 0;
  std::optional<std::uint32_t> q;
  std::optional<std::uint32_t> p;
  std::uint32_t u = 1;
  std::vector<std::uint32_t> modulus;
};

struct RunConfig {
  GroupSource source;
  Scope scope = Scope::All;
  std::string subgroups_file;
  std::optional<std::uint64_t> max_index;
  GroupOptions group;
  TheoryOptions theory;
  unsigned jobs = 1;
  std::string out;
  std::string format = "json";
  bool strict = false;
  bool timing = false;
  std::uint64_t seed = 0;
};

/// Resolves --preset/--gens and the field flags. Raises ExitError(2).
GroupSpec resolve_group_spec(const GroupSource& source);

/// Canonical identity of the generators, used for cache file names and
/// report keys. FNV-1a over the compact JSON of the spec without its name.
std::string spec_hash(const GroupSpec& spec);

/// Closure of the spec, memoised in $MOBIUS_LATTICE_CACHE when set.
GroupPtr load_group(const GroupSpec& spec, const GroupOptions& options, std::ostream& warn);

/// A subgroup given as "trivial", "G", a path to a JSON file holding a list
/// of generator matrices, or that list inline.
SubgroupRef parse_subgroup(const GroupSet& g, const std::string& text);

/// The explicit subgroup list of a --subgroups-file: a JSON array whose
/// entries are generator lists.
std::vector<SubgroupRef> read_subgroups_file(const GroupSet& g, const std::string& path);

/// Hex FNV-1a of the sorted member indices, stable for a fixed group.
std::string subgroup_key(const SubgroupRef& h);

}  // namespace mobius::cli
