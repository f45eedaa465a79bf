#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"

namespace mobius::cli {

/// Entry point shared by the executable and the in-process tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct SweepTally {
  std::size_t pairs = 0;
  std::size_t ok = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;   ///< cap hit on that pair
  std::size_t errors = 0;    ///< any other library error
  std::size_t excluded = 0;  ///< H = G
};

/// 1 beats 2 beats 3: a violated identity is reported even when other pairs
/// errored or were skipped. Skips only count under strict.
int exit_code(const SweepTally& tally, bool strict);

/// One JSON line per pair, then the summary object, or a CSV table. The
/// table never includes wall-clock fields unless `config.timing` is set.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// mu(from, to) and |[from, to]| inside the loaded group.
int cmd_mobius(const RunConfig& config, const std::string& from, const std::string& to,
               std::ostream& out, std::ostream& err);

/// Merged table over verify outputs. Conflicting duplicates raise
/// MalformedReport.
int cmd_report(const std::vector<std::string>& paths, const std::string& format, std::ostream& out);

/// Row columns shared by verify --format csv and report.
const std::vector<std::string>& table_columns();
void write_csv(const std::vector<nlohmann::ordered_json>& rows, std::ostream& out);

}  // namespace mobius::cli
