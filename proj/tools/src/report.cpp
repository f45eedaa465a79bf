#include <fstream>
#include <map>
#include <ostream>
#include <tuple>

#include "app.hpp"

namespace mobius::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw ExitError(kExitConfig, std::string(to_string(Errc::MalformedReport)) + ": " + what);
}

std::string csv_cell(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (!v.is_string()) return v.dump();
  const std::string s = v.get<std::string>();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

const std::vector<std::string>& table_columns() {
  static const std::vector<std::string> columns = {
      "group",         "group_hash",   "h_id",         "h_order",          "status",
      "mu_hat",        "sum_psi_prime", "sum_psi",     "chi1_reduced",     "chi2_reduced",
      "mu_full",       "eq3_residual", "sum_psi_complement", "identities_hold", "reason"};
  return columns;
}

void write_csv(const std::vector<ordered_json>& rows, std::ostream& out) {
  const auto& cols = table_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      out << (i ? "," : "") << (row.contains(cols[i]) ? csv_cell(row[cols[i]]) : "");
    out << "\n";
  }
}

int cmd_report(const std::vector<std::string>& paths, const std::string& format, std::ostream& out) {
  using Key = std::tuple<std::string, std::string, std::string>;
  std::map<Key, std::size_t> seen;
  std::vector<ordered_json> rows;
  std::size_t duplicates = 0;

  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw ExitError(kExitConfig, "cannot open " + path);
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const std::string where = path + ":" + std::to_string(lineno);
      ordered_json row;
      try {
        row = ordered_json::parse(line);
      } catch (const json::exception& e) {
        malformed(where + ": " + e.what());
      }
      if (!row.is_object()) malformed(where + ": expected an object");
      if (row.contains("summary")) continue;
      for (const char* field : {"group", "group_hash", "h_id", "status"})
        if (!row.contains(field) || !row[field].is_string()) malformed(where + ": missing '" + field + "'");
      row.erase("seconds");
      Key key{row["group"], row["group_hash"], row["h_id"]};
      const auto [it, fresh] = seen.emplace(key, rows.size());
      if (fresh) {
        rows.push_back(std::move(row));
        continue;
      }
      ++duplicates;
      if (json::parse(rows[it->second].dump()) != json::parse(row.dump()))
        malformed(where + ": conflicting duplicate of " + std::get<0>(key) + " h_id " + std::get<2>(key));
    }
  }

  if (format == "csv") {
    write_csv(rows, out);
  } else {
    for (const auto& row : rows) {
      ordered_json slim;
      for (const auto& c : table_columns())
        if (row.contains(c)) slim[c] = row[c];
      out << slim.dump() << "\n";
    }
    out << ordered_json{{"summary", {{"files", paths.size()}, {"rows", rows.size()}, {"duplicates", duplicates}}}}
               .dump()
        << "\n";
  }
  return kExitOk;
}

}  // namespace mobius::cli
