#include "app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace mobius::cli {

using nlohmann::ordered_json;

namespace {

void add_group_flags(CLI::App& cmd, RunConfig& cfg) {
  auto* preset = cmd.add_option("--preset", cfg.source.preset, "Classical group")
                     ->check(CLI::IsMember({"GL", "SL"}));
  auto* gens = cmd.add_option("--gens", cfg.source.gens_file, "Group spec JSON file");
  preset->excludes(gens);
  cmd.add_option("--n", cfg.source.n, "Matrix dimension")->check(CLI::PositiveNumber);
  cmd.add_option("--q", cfg.source.q, "Field order");
  cmd.add_option("--p", cfg.source.p, "Field characteristic");
  cmd.add_option("--u", cfg.source.u, "Extension degree")->check(CLI::PositiveNumber);
  cmd.add_option("--modulus", cfg.source.modulus, "Defining polynomial, low degree first")->delimiter(',');
  cmd.add_option("--max-order", cfg.group.order_cap, "Group order cap")->check(CLI::PositiveNumber);
  cmd.add_option("--max-interval", cfg.theory.interval_cap, "Overgroup interval cap")->check(CLI::PositiveNumber);
}

SubgroupRef map_into(const GroupSet& promoted, const SubgroupRef& k) {
  const auto& index = promoted.parent_index();
  BitSet members(promoted.order());
  for (ElementId id : k.member_ids()) {
    const auto it = std::lower_bound(index.begin(), index.end(), id);
    members.set(static_cast<std::size_t>(it - index.begin()));
  }
  return promoted.subgroup_from_members(members);
}

}  // namespace

int cmd_mobius(const RunConfig& config, const std::string& from, const std::string& to, std::ostream& out,
               std::ostream& err) {
  const GroupSpec spec = resolve_group_spec(config.source);
  try {
    const GroupPtr g = load_group(spec, config.group, err);
    const SubgroupRef lo = parse_subgroup(*g, from);
    const SubgroupRef hi = parse_subgroup(*g, to);
    if (!lo.is_subgroup_of(hi))
      throw Error(Errc::NotASubgroup, "'" + from + "' is not contained in '" + to + "'");
    const GroupPtr top = GroupSet::promote(hi, config.group);
    const SubgroupRef bottom = map_into(*top, lo);
    const auto interval = overgroup_interval(*top, bottom, config.theory.interval_cap);
    ordered_json j;
    j["group"] = spec.name;
    j["from_order"] = lo.order();
    j["to_order"] = hi.order();
    j["interval_size"] = interval.size();
    j["mu"] = mobius_full_interval(*top, bottom, config.theory.interval_cap);
    out << j.dump() << "\n";
    return kExitOk;
  } catch (const Error& e) {
    throw ExitError(is_cap_error(e.code()) ? kExitCap : kExitConfig, e.what());
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mobius functions of reducible-subgroup ideals in finite linear groups", "mobius"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string scope = "all";
  auto* verify = app.add_subcommand("verify", "Check the identities for every subgroup in scope");
  add_group_flags(*verify, cfg);
  verify->add_option("--subgroups", scope, "Subgroup scope")->check(CLI::IsMember({"all", "reducible", "file"}));
  verify->add_option("--subgroups-file", cfg.subgroups_file, "JSON list of generator lists");
  verify->add_option("--max-index", cfg.max_index, "Only H with |G:H| at most this")->check(CLI::PositiveNumber);
  verify->add_option("--max-powerset", cfg.theory.max_powerset, "Widest stabilizer family walked")
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", cfg.out, "Write the report here instead of stdout");
  verify->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--strict", cfg.strict, "Exit 3 if any pair was skipped on a cap");
  verify->add_flag("--timing", cfg.timing, "Add wall-clock fields (breaks byte-for-byte reproducibility)");
  verify->add_option("--seed", cfg.seed, "Seed for the work schedule");

  std::string from = "trivial", to = "G";
  auto* mob = app.add_subcommand("mobius", "mu(from, to) in the subgroup lattice");
  add_group_flags(*mob, cfg);
  mob->add_option("--from", from, "trivial, G, a generator list or a file holding one");
  mob->add_option("--to", to, "trivial, G, a generator list or a file holding one");

  std::vector<std::string> inputs;
  std::string report_format = "csv";
  auto* report = app.add_subcommand("report", "Merge verify outputs into one table");
  report->add_option("files", inputs, "verify outputs (JSON lines)")->required()->check(CLI::ExistingFile);
  report->add_option("--format", report_format, "Table format")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (verify->parsed()) {
      cfg.scope = scope == "reducible" ? Scope::Reducible : scope == "file" ? Scope::File : Scope::All;
      if (cfg.scope == Scope::File && cfg.subgroups_file.empty())
        throw ExitError(kExitConfig, "--subgroups file needs --subgroups-file");
      if (cfg.scope != Scope::File && !cfg.subgroups_file.empty())
        throw ExitError(kExitConfig, "--subgroups-file needs --subgroups file");
      return cmd_verify(cfg, out, err);
    }
    if (mob->parsed()) return cmd_mobius(cfg, from, to, out, err);
    return cmd_report(inputs, report_format, out);
  } catch (const ExitError& e) {
    err << "error: " << e.what() << "\n";
    return e.status();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_cap_error(e.code()) ? kExitCap : kExitConfig;
  }
}

}  // namespace mobius::cli
