#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fewbranch/generators.hpp"
#include "fewbranch/verify.hpp"

namespace fewbranch {

enum class OraclePolicy {
  Hypothesis,  ///< run the oracle on instances whose hypotheses hold
  All,         ///< also on connected instances whose hypotheses fail
  Never,
};

/// Campaign configuration, read from JSON:
///
///   {
///     "theorem": "t14",             "instances": 500,
///     "master_seed": 1,             "n_min": 5, "n_max": 12,
///     "strategies": ["linegraph", "clawrepair"],
///     "p_min": 0.1, "p_max": 0.7,
///     "oracle_cap": 12,             "oracle_policy": "hypothesis",
///     "leaf_check": true,           "threads": 0,
///     "output": "report.json",      "counterexample_dir": "counterexamples"
///   }
///
/// Every key is optional; the values above are the defaults except output and
/// counterexample_dir, which default to empty (no files written).
struct CampaignConfig {
  TheoremId theorem;
  int instances = 100;
  std::uint64_t master_seed = 1;
  int n_min = 5;
  int n_max = 12;
  std::vector<Strategy> strategies{Strategy::LineGraph, Strategy::ClawRepair};
  double p_min = 0.1;
  double p_max = 0.7;
  int oracle_cap = 12;
  OraclePolicy oracle_policy = OraclePolicy::Hypothesis;
  bool leaf_check = true;
  int threads = 0;  ///< 0: hardware concurrency
  std::string output;
  std::string counterexample_dir;

  /// Throws std::invalid_argument on unknown keys or bad values.
  static CampaignConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  /// The generator spec of instance `index`; depends only on the master seed,
  /// the index, and the n/p ranges and strategy list.
  GenSpec instance_spec(int index) const;
};

struct LeafCheck {
  int bound = 0;
  int reduced_leaves = 0;               ///< reduce_leaves from the DFS tree
  std::optional<int> oracle_min_leaves;
  bool heuristic_ok() const { return reduced_leaves <= bound; }
  bool oracle_ok() const { return oracle_min_leaves && *oracle_min_leaves <= bound; }
};

struct InstanceRecord {
  int index = 0;
  std::string spec;
  int n = 0;
  std::size_t m = 0;
  HypothesisReport hypotheses;
  std::optional<SolveStatus> solve_status;
  int solver_branch_count = 0;
  std::size_t moves = 0;
  bool descent_ok = true;
  std::optional<int> oracle_branch_optimum;
  bool oracle_exact = false;
  std::optional<bool> conclusion;
  std::optional<LeafCheck> leaf_check;
  bool counterexample = false;
};

struct Counterexample {
  int index = 0;
  std::string spec;
  std::string edge_list;
  int oracle_optimum = 0;
};

struct CampaignReport {
  std::string spec_digest;  ///< FNV-1a of the normalized config, hex
  std::string theorem;
  int instance_count = 0;
  int hypothesis_satisfied = 0;
  int vacuous = 0;
  int oracle_checked = 0;
  int solved_by_exchange = 0;
  double solver_only_success_rate = 0.0;  ///< solved_by_exchange / hypothesis_satisfied
  int descent_violations = 0;
  int leaf_heuristic_misses = 0;
  int leaf_oracle_failures = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<InstanceRecord> records;
};

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Generates and checks every instance. Counterexamples are written to
/// counterexample_dir as soon as they survive triage; the report is written
/// to `output` when set.
CampaignReport run_campaign(const CampaignConfig& config);

nlohmann::json to_json(const CampaignReport& report);

/// Writes `report` via a temporary file and rename, plus a sibling
/// "<path>.meta.json" carrying wall-clock data that the report itself omits.
void write_report(const CampaignReport& report, const std::filesystem::path& path, double wall_seconds);

}  // namespace fewbranch
