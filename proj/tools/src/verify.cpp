#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <thread>

#include "app.hpp"

namespace mobius::cli {

using nlohmann::ordered_json;

namespace {

struct PairResult {
  bool in_scope = true;
  ordered_json row;
};

ordered_json generators_json(const SubgroupRef& h) {
  ordered_json gens = ordered_json::array();
  for (const auto& m : h.generator_matrices()) gens.push_back(ordered_json::parse(matrix_to_json(m).dump()));
  return gens;
}

template <typename T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

PairResult verify_one(const GroupSet& g, const SubgroupRef& h, const RunConfig& config,
                      const ordered_json& head) {
  PairResult result;
  ordered_json& row = result.row;
  row = head;
  row["h_id"] = subgroup_key(h);
  row["h_order"] = h.order();
  row["h_index"] = g.order() / h.order();
  row["h_generators"] = generators_json(h);

  const auto start = std::chrono::steady_clock::now();
  try {
    if (config.scope == Scope::Reducible && stabilizer_family(g, h, config.theory).subspaces.empty()) {
      result.in_scope = false;
      return result;
    }
    if (h == g.whole()) {
      row["status"] = "excluded";
      row["reason"] = "H = G";
      return result;
    }
    const TheoremReport r = verify_theorem_4_5(g, h, config.theory, true);
    row["h_irreducible"] = r.h_irreducible;
    row["invariant_subspaces"] = r.invariant_subspaces;
    row["distinct_stabilizers"] = r.distinct_stabilizers;
    row["ideal_size"] = r.ideal_size;
    row["mu_hat"] = r.mu_hat;
    row["sum_psi_prime"] = r.sum_psi_prime;
    row["sum_psi"] = r.sum_psi;
    row["sum_psi_complement"] = r.sum_psi_complement;
    row["chi1_reduced"] = r.chi1_reduced;
    row["chi2_reduced"] = r.chi2_reduced;
    row["mu_full"] = opt(r.mu_full);
    row["eq3_residual"] = opt(r.eq3_residual);
    row["all_equal"] = r.all_equal;
    row["identities_hold"] = r.identities_hold();
    row["status"] = r.identities_hold() ? "ok" : "failed";
    row["reason"] = r.identities_hold() ? "" : "identity violated";
  } catch (const Error& e) {
    row["status"] = is_cap_error(e.code()) ? "skipped" : "error";
    row["reason"] = e.what();
  }
  if (config.timing)
    row["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SubgroupRef> candidates(const GroupSet& g, const RunConfig& config) {
  std::vector<SubgroupRef> hs;
  try {
    if (config.scope == Scope::File) {
      for (auto& h : read_subgroups_file(g, config.subgroups_file))
        if (std::find(hs.begin(), hs.end(), h) == hs.end()) hs.push_back(std::move(h));
    } else {
      hs = overgroup_interval(g, g.trivial(), config.theory.interval_cap);
    }
  } catch (const Error& e) {
    throw ExitError(is_cap_error(e.code()) ? kExitCap : kExitConfig, e.what());
  }
  if (config.max_index) {
    std::erase_if(hs, [&](const SubgroupRef& h) { return g.order() / h.order() > *config.max_index; });
  }
  return hs;
}

std::vector<PairResult> run_pool(const GroupSet& g, const std::vector<SubgroupRef>& hs,
                                 const RunConfig& config, const ordered_json& head) {
  std::vector<PairResult> results(hs.size());
  std::vector<std::size_t> schedule(hs.size());
  std::iota(schedule.begin(), schedule.end(), 0);
  std::mt19937_64 rng(config.seed);
  std::shuffle(schedule.begin(), schedule.end(), rng);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < schedule.size();) {
      const std::size_t i = schedule[k];
      results[i] = verify_one(g, hs[i], config, head);
    }
  };
  const unsigned width = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(hs.size())));
  if (width == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
  }
  return results;
}

std::string scope_name(Scope s) {
  switch (s) {
    case Scope::All: return "all";
    case Scope::Reducible: return "reducible";
    case Scope::File: return "file";
  }
  return "?";
}

}  // namespace

int exit_code(const SweepTally& tally, bool strict) {
  if (tally.failed) return kExitViolation;
  if (tally.errors) return kExitConfig;
  if (strict && tally.skipped) return kExitCap;
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const GroupSpec spec = resolve_group_spec(config.source);
  GroupPtr g;
  try {
    g = load_group(spec, config.group, err);
  } catch (const Error& e) {
    throw ExitError(is_cap_error(e.code()) ? kExitCap : kExitConfig, e.what());
  }
  if (!is_irreducible(*g))
    throw ExitError(kExitConfig, std::string(to_string(Errc::ReducibleAmbientGroup)) + ": " + spec.name +
                                     " fixes a proper nontrivial subspace");

  ordered_json head;
  head["group"] = spec.name;
  head["group_hash"] = spec_hash(spec);

  const auto hs = candidates(*g, config);
  auto results = run_pool(*g, hs, config, head);

  SweepTally tally;
  std::vector<ordered_json> rows;
  ordered_json skips = ordered_json::array();
  for (auto& r : results) {
    if (!r.in_scope) continue;
    ++tally.pairs;
    const std::string status = r.row["status"];
    if (status == "ok") ++tally.ok;
    else if (status == "failed") ++tally.failed;
    else if (status == "skipped") ++tally.skipped;
    else if (status == "excluded") ++tally.excluded;
    else ++tally.errors;
    if (status == "skipped" || status == "error")
      skips.push_back({{"h_id", r.row["h_id"]}, {"status", status}, {"reason", r.row["reason"]}});
    rows.push_back(std::move(r.row));
  }

  ordered_json summary;
  summary["group"] = spec.name;
  summary["group_hash"] = spec_hash(spec);
  summary["group_order"] = g->order();
  summary["scope"] = scope_name(config.scope);
  summary["max_order"] = config.group.order_cap;
  summary["max_interval"] = config.theory.interval_cap;
  summary["max_powerset"] = config.theory.max_powerset;
  if (config.max_index) summary["max_index"] = *config.max_index;
  summary["seed"] = config.seed;
  summary["pairs"] = tally.pairs;
  summary["ok"] = tally.ok;
  summary["failed"] = tally.failed;
  summary["skipped"] = tally.skipped;
  summary["errors"] = tally.errors;
  summary["excluded"] = tally.excluded;
  summary["skips"] = std::move(skips);
  const int code = exit_code(tally, config.strict);
  summary["exit_code"] = code;
  if (config.timing)
    summary["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) throw ExitError(kExitConfig, "cannot write " + config.out);
    sink = &file;
  }
  if (config.format == "csv") {
    write_csv(rows, *sink);
    err << ordered_json{{"summary", summary}}.dump() << "\n";
  } else {
    for (const auto& row : rows) *sink << row.dump() << "\n";
    *sink << ordered_json{{"summary", summary}}.dump() << "\n";
  }
  if (tally.failed) err << "error: " << tally.failed << " pair(s) violate an identity\n";
  return code;
}

}  // namespace mobius::cli
