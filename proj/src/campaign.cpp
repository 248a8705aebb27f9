#include "fewbranch/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "fewbranch/graph_io.hpp"
#include "fewbranch/report.hpp"

namespace fewbranch {

using nlohmann::json;

namespace {

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::LineGraph: return "linegraph";
    case Strategy::ClawRepair: return "clawrepair";
    case Strategy::Random: return "random";
    case Strategy::NamedFamily: return "named";
  }
  return "named";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "linegraph") return Strategy::LineGraph;
  if (s == "clawrepair") return Strategy::ClawRepair;
  if (s == "random") return Strategy::Random;
  throw std::invalid_argument("unknown campaign strategy '" + s + "'");
}

std::string policy_name(OraclePolicy p) {
  switch (p) {
    case OraclePolicy::Hypothesis: return "hypothesis";
    case OraclePolicy::All: return "all";
    case OraclePolicy::Never: return "never";
  }
  return "hypothesis";
}

OraclePolicy parse_policy(const std::string& s) {
  if (s == "hypothesis") return OraclePolicy::Hypothesis;
  if (s == "all") return OraclePolicy::All;
  if (s == "never") return OraclePolicy::Never;
  throw std::invalid_argument("unknown oracle_policy '" + s + "'");
}

bool descent_holds(const std::vector<TraceEntry>& trace) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (!(trace[i].after < trace[i].before)) return false;
    if (i + 1 < trace.size() && !(trace[i].after == trace[i + 1].before)) return false;
  }
  return true;
}

// Re-derives everything from scratch before an instance may be reported.
std::optional<int> triage(const Graph& g, const TheoremId& theorem, int cap) {
  if (!is_connected(g) || find_claw(g)) return std::nullopt;
  if (!sigma_k(g, theorem.sigma_order()).at_least(theorem.threshold(g.order()))) return std::nullopt;
  OracleOptions opts;
  opts.cap = 2 * cap;
  opts.force = true;
  opts.method = OracleMethod::BranchAndBound;
  const auto result = min_branch_vertices_exact(g, opts);
  if (result.optimum <= theorem.branch_bound()) return std::nullopt;
  return result.optimum;
}

void persist_counterexample(const std::filesystem::path& dir, const Counterexample& c) {
  std::filesystem::create_directories(dir);
  const auto path = dir / ("instance-" + std::to_string(c.index) + ".txt");
  std::ofstream out(path);
  out << "# " << c.spec << " oracle optimum " << c.oracle_optimum << '\n' << c.edge_list;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

struct Worker {
  const CampaignConfig& config;
  std::mutex& persist_mutex;

  std::pair<InstanceRecord, std::optional<Counterexample>> run(int index) const {
    const GenSpec spec = config.instance_spec(index);
    const Graph g = generate(spec);
    InstanceRecord rec;
    rec.index = index;
    rec.spec = spec.to_string();
    rec.n = g.order();
    rec.m = g.size();
    rec.hypotheses = evaluate_hypotheses(g, config.theorem);
    const bool oracle_allowed = config.oracle_policy != OraclePolicy::Never && g.order() <= config.oracle_cap &&
                                (rec.hypotheses.satisfied ||
                                 (config.oracle_policy == OraclePolicy::All && rec.hypotheses.connected));
    if (!rec.hypotheses.connected) return {rec, std::nullopt};

    if (rec.hypotheses.satisfied) {
      try {
        SolveOptions opts;
        opts.oracle_cap = config.oracle_cap;
        const SolveOutcome out = solve(g, opts);
        rec.solve_status = out.status;
        rec.solver_branch_count = out.branch_count();
        rec.moves = out.trace.size();
        rec.descent_ok = descent_holds(out.trace);
      } catch (const std::logic_error&) {
        rec.descent_ok = false;
      }
    }

    OracleOptions oracle;
    oracle.cap = config.oracle_cap;
    if (oracle_allowed) {
      const auto r = min_branch_vertices_exact(g, oracle);
      rec.oracle_branch_optimum = r.optimum;
      rec.oracle_exact = r.exact;
    }
    if (rec.hypotheses.satisfied) {
      if (rec.oracle_branch_optimum)
        rec.conclusion = *rec.oracle_branch_optimum <= config.theorem.branch_bound();
      else if (rec.solve_status && rec.solver_branch_count <= config.theorem.branch_bound())
        rec.conclusion = true;
    }

    if (config.leaf_check && rec.hypotheses.satisfied) {
      LeafCheck lc;
      lc.bound = config.theorem.leaf_bound();
      lc.reduced_leaves = leaf_count(reduce_leaves(g, spanning_tree_dfs(g), lc.bound));
      if (oracle_allowed) lc.oracle_min_leaves = min_leaves_exact(g, oracle).optimum;
      rec.leaf_check = lc;
    }

    std::optional<Counterexample> found;
    if (rec.conclusion == false && rec.oracle_exact) {
      if (auto optimum = triage(g, config.theorem, config.oracle_cap)) {
        found = Counterexample{index, rec.spec, to_edge_list(g), *optimum};
        rec.counterexample = true;
        if (!config.counterexample_dir.empty()) {
          std::lock_guard lock(persist_mutex);
          persist_counterexample(config.counterexample_dir, *found);
        }
      }
    }
    return {rec, found};
  }
};

json record_json(const InstanceRecord& r) {
  json out = {{"index", r.index},
              {"spec", r.spec},
              {"n", r.n},
              {"m", r.m},
              {"hypotheses", to_json(r.hypotheses)},
              {"descent_ok", r.descent_ok},
              {"counterexample", r.counterexample},
              {"conclusion", r.conclusion ? json(*r.conclusion) : json(nullptr)}};
  if (r.solve_status)
    out["solver"] = {{"status", std::string(to_string(*r.solve_status))},
                     {"branch_count", r.solver_branch_count},
                     {"moves", r.moves}};
  if (r.oracle_branch_optimum) out["oracle"] = {{"branch_optimum", *r.oracle_branch_optimum}, {"exact", r.oracle_exact}};
  if (r.leaf_check) {
    json lc = {{"bound", r.leaf_check->bound}, {"reduced_leaves", r.leaf_check->reduced_leaves}};
    lc["oracle_min_leaves"] = r.leaf_check->oracle_min_leaves ? json(*r.leaf_check->oracle_min_leaves) : json(nullptr);
    out["leaf_check"] = lc;
  }
  return out;
}

}  // namespace

CampaignConfig CampaignConfig::from_json(const json& j) {
  static const std::set<std::string> known{"theorem",    "instances",  "master_seed",   "n_min",     "n_max",
                                           "strategies", "p_min",      "p_max",         "oracle_cap", "oracle_policy",
                                           "leaf_check", "threads",    "output",        "counterexample_dir"};
  if (!j.is_object()) throw std::invalid_argument("campaign config must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) throw std::invalid_argument("unknown campaign key '" + key + "'");
  CampaignConfig c;
  try {
    if (j.contains("theorem")) c.theorem = TheoremId::parse(j.at("theorem").get<std::string>());
    c.instances = j.value("instances", c.instances);
    c.master_seed = j.value("master_seed", c.master_seed);
    c.n_min = j.value("n_min", c.n_min);
    c.n_max = j.value("n_max", c.n_max);
    if (j.contains("strategies")) {
      c.strategies.clear();
      for (const auto& s : j.at("strategies")) c.strategies.push_back(parse_strategy(s.get<std::string>()));
    }
    c.p_min = j.value("p_min", c.p_min);
    c.p_max = j.value("p_max", c.p_max);
    c.oracle_cap = j.value("oracle_cap", c.oracle_cap);
    if (j.contains("oracle_policy")) c.oracle_policy = parse_policy(j.at("oracle_policy").get<std::string>());
    c.leaf_check = j.value("leaf_check", c.leaf_check);
    c.threads = j.value("threads", c.threads);
    c.output = j.value("output", c.output);
    c.counterexample_dir = j.value("counterexample_dir", c.counterexample_dir);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad campaign config: ") + e.what());
  }
  if (c.instances < 0) throw std::invalid_argument("instances must be nonnegative");
  if (c.n_min < 1 || c.n_max < c.n_min) throw std::invalid_argument("need 1 <= n_min <= n_max");
  if (c.strategies.empty()) throw std::invalid_argument("strategies must not be empty");
  if (!(c.p_min >= 0 && c.p_min <= c.p_max && c.p_max <= 1)) throw std::invalid_argument("need 0 <= p_min <= p_max <= 1");
  if (c.oracle_cap < 1) throw std::invalid_argument("oracle_cap must be positive");
  return c;
}

json CampaignConfig::to_json() const {
  json strategies = json::array();
  for (Strategy s : this->strategies) strategies.push_back(strategy_name(s));
  return {{"theorem", theorem.to_string()},     {"instances", instances},
          {"master_seed", master_seed},         {"n_min", n_min},
          {"n_max", n_max},                     {"strategies", strategies},
          {"p_min", p_min},                     {"p_max", p_max},
          {"oracle_cap", oracle_cap},           {"oracle_policy", policy_name(oracle_policy)},
          {"leaf_check", leaf_check}};
}

GenSpec CampaignConfig::instance_spec(int index) const {
  const std::uint64_t seed = splitmix64(master_seed + static_cast<std::uint64_t>(index));
  Rng rng(seed);
  GenSpec spec;
  spec.strategy = strategies[static_cast<std::size_t>(index) % strategies.size()];
  spec.n = n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
  spec.p = std::round((p_min + (p_max - p_min) * rng.uniform()) * 100.0) / 100.0;
  spec.seed = seed;
  return spec;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto count = static_cast<std::size_t>(config.instances);
  std::vector<std::pair<InstanceRecord, std::optional<Counterexample>>> results(count);
  std::mutex persist_mutex;
  const Worker worker{config, persist_mutex};

  unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto drain = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = worker.run(static_cast<int>(i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(drain);
  drain();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  CampaignReport report;
  report.spec_digest = fnv1a_hex(config.to_json().dump());
  report.theorem = config.theorem.to_string();
  report.instance_count = config.instances;
  for (auto& [rec, found] : results) {
    if (rec.hypotheses.satisfied) ++report.hypothesis_satisfied;
    if (rec.hypotheses.vacuous) ++report.vacuous;
    if (rec.oracle_branch_optimum) ++report.oracle_checked;
    if (rec.solve_status == SolveStatus::Solved) ++report.solved_by_exchange;
    if (!rec.descent_ok) ++report.descent_violations;
    if (rec.leaf_check) {
      if (!rec.leaf_check->heuristic_ok()) ++report.leaf_heuristic_misses;
      if (rec.leaf_check->oracle_min_leaves && !rec.leaf_check->oracle_ok()) ++report.leaf_oracle_failures;
    }
    if (found) report.counterexamples.push_back(std::move(*found));
    report.records.push_back(std::move(rec));
  }
  if (report.hypothesis_satisfied > 0)
    report.solver_only_success_rate =
        static_cast<double>(report.solved_by_exchange) / static_cast<double>(report.hypothesis_satisfied);

  if (!config.output.empty()) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    write_report(report, config.output, elapsed.count());
  }
  return report;
}

json to_json(const CampaignReport& r) {
  json counterexamples = json::array();
  for (const auto& c : r.counterexamples)
    counterexamples.push_back(
        {{"index", c.index}, {"spec", c.spec}, {"edge_list", c.edge_list}, {"oracle_optimum", c.oracle_optimum}});
  json records = json::array();
  for (const auto& rec : r.records) records.push_back(record_json(rec));
  return {{"spec_digest", r.spec_digest},
          {"theorem", r.theorem},
          {"instance_count", r.instance_count},
          {"hypothesis_satisfied", r.hypothesis_satisfied},
          {"vacuous", r.vacuous},
          {"oracle_checked", r.oracle_checked},
          {"solved_by_exchange", r.solved_by_exchange},
          {"solver_only_success_rate", r.solver_only_success_rate},
          {"descent_violations", r.descent_violations},
          {"leaf_heuristic_misses", r.leaf_heuristic_misses},
          {"leaf_oracle_failures", r.leaf_oracle_failures},
          {"counterexamples", counterexamples},
          {"instances", records}};
}

void write_report(const CampaignReport& report, const std::filesystem::path& path, double wall_seconds) {
  auto write_atomic = [](const std::filesystem::path& target, const std::string& text) {
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    auto tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      out << text;
      if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
  };
  write_atomic(path, to_json(report).dump(2) + "\n");
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  const json meta = {{"wall_seconds", wall_seconds},
                     {"finished_unix", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
                     {"spec_digest", report.spec_digest}};
  auto meta_path = path;
  meta_path += ".meta.json";
  write_atomic(meta_path, meta.dump(2) + "\n");
}

}  // namespace fewbranch
