// Command-line front end: solve, verify, gen, campaign.
//
// Exit status: 0 success, 1 usage or input error, 2 solver stalled.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fewbranch/campaign.hpp"
#include "fewbranch/generators.hpp"
#include "fewbranch/graph_io.hpp"
#include "fewbranch/report.hpp"
#include "fewbranch/solver.hpp"
#include "fewbranch/verify.hpp"

namespace fb = fewbranch;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kStalled = 2;

fb::Graph load_graph(const std::string& path) {
  if (path == "-") return fb::read_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return fb::read_graph(in);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + out_path);
}

std::string certificate_text(const fb::CountingCertificate& c) {
  std::ostringstream os;
  os << "certificate shape " << fb::to_string(c.shape) << (c.applicable ? "" : " (not applicable)") << '\n';
  if (!c.applicable) return os.str();
  os << "  I size " << c.sigma_order << (c.special_set_independent ? ", independent" : ", not independent") << '\n';
  for (const auto& r : c.regions)
    os << "  " << r.name << " count " << r.count << " capacity " << r.capacity << (r.violated() ? " VIOLATED" : "")
       << '\n';
  os << "  deg(I) " << c.degree_sum << " capacity total " << c.capacity_total << " margin " << c.contradiction_margin
     << " sigma " << c.sigma_bound.to_string() << '\n';
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning trees with few branch vertices in claw-free graphs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path;
  std::string theorem_text = "t14";
  std::string spec_text;
  std::string config_path;
  std::uint64_t seed = 0;
  int oracle_cap = 12;
  long move_cap = 0;
  bool trace = false;
  bool json_out = false;
  bool oracle = false;

  auto* solve_cmd = app.add_subcommand("solve", "Find a spanning tree with at most two branch vertices");
  solve_cmd->add_option("input", input, "Edge-list file, or - for standard input");
  solve_cmd->add_flag("--trace", trace, "Print one line per applied exchange");
  solve_cmd->add_flag("--json", json_out, "Print the outcome as JSON");
  solve_cmd->add_flag("--oracle", oracle, "Finish unsolved runs with the exact oracle");
  solve_cmd->add_option("--oracle-cap", oracle_cap, "Largest order the oracle accepts")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--move-cap", move_cap, "Exchange limit (default n^3)")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--out", out_path, "Write output here instead of standard output");

  auto* verify_cmd = app.add_subcommand("verify", "Check a degree-sum statement on one graph (JSON output)");
  verify_cmd->add_option("input", input, "Edge-list file, or - for standard input");
  verify_cmd->add_option("--theorem", theorem_text, "t14, t15 or conj:<k>");
  verify_cmd->add_option("--oracle-cap", oracle_cap, "Largest order the oracle accepts")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--move-cap", move_cap, "Exchange limit (default n^3)")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", json_out, "Accepted for symmetry; output is always JSON");
  verify_cmd->add_option("--out", out_path, "Write output here instead of standard output");

  auto* gen_cmd = app.add_subcommand("gen", "Print the edge list of a generator spec");
  gen_cmd->add_option("spec", spec_text, "e.g. linegraph:10:0.3:7, clawrepair:8:0.2:1, net, line:K4")->required();
  gen_cmd->add_option("--seed", seed, "Replace the seed of a random spec");
  gen_cmd->add_option("--out", out_path, "Write output here instead of standard output");

  auto* campaign_cmd = app.add_subcommand("campaign", "Run a verification campaign from a JSON config");
  campaign_cmd->add_option("config", config_path, "Campaign config file")->required();
  campaign_cmd->add_option("--seed", seed, "Override master_seed");
  campaign_cmd->add_option("--oracle-cap", oracle_cap, "Override oracle_cap")->check(CLI::PositiveNumber);
  campaign_cmd->add_option("--out", out_path, "Override the report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) {
      const fb::Graph g = load_graph(input);
      fb::SolveOptions opts;
      opts.oracle_fallback = oracle;
      opts.oracle_cap = oracle_cap;
      opts.move_cap = move_cap;
      const fb::SolveOutcome outcome = fb::solve(g, opts);
      const bool stalled = outcome.status == fb::SolveStatus::Stalled || outcome.status == fb::SolveStatus::MoveCapReached;
      if (json_out) {
        emit(out_path, fb::to_json(outcome).dump(2) + "\n");
      } else {
        std::string text;
        if (trace)
          for (const auto& entry : outcome.trace) text += fb::format_trace_line(entry) + '\n';
        text += "status " + std::string(fb::to_string(outcome.status)) + '\n';
        text += "branch_vertices " + std::to_string(outcome.branch_count()) + '\n';
        text += fb::to_parent_array(outcome.tree);
        if (stalled && outcome.certificate) text += certificate_text(*outcome.certificate);
        emit(out_path, text);
      }
      return stalled ? kStalled : kOk;
    }
    if (*verify_cmd) {
      const fb::TheoremId theorem = fb::TheoremId::parse(theorem_text);
      const fb::Graph g = load_graph(input);
      fb::VerifyOptions opts;
      opts.oracle_cap = oracle_cap;
      opts.move_cap = move_cap;
      const auto check = fb::check_theorem(g, theorem, opts);
      emit(out_path, fb::to_json(check, theorem).dump(2) + "\n");
      return kOk;
    }
    if (*gen_cmd) {
      fb::GenSpec spec = fb::parse_gen_spec(spec_text);
      if (gen_cmd->count("--seed") > 0) {
        if (spec.strategy == fb::Strategy::NamedFamily) throw std::invalid_argument("--seed needs a random spec");
        spec.seed = seed;
      }
      emit(out_path, fb::to_edge_list(fb::generate(spec)));
      return kOk;
    }
    if (*campaign_cmd) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot open " + config_path);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
      }
      auto config = fb::CampaignConfig::from_json(j);
      if (campaign_cmd->count("--seed") > 0) config.master_seed = seed;
      if (campaign_cmd->count("--oracle-cap") > 0) config.oracle_cap = oracle_cap;
      if (!out_path.empty()) config.output = out_path;
      if (config.output.empty()) config.output = "campaign-report.json";
      const auto report = fb::run_campaign(config);
      std::cout << "theorem " << report.theorem << " instances " << report.instance_count << " satisfied "
                << report.hypothesis_satisfied << " vacuous " << report.vacuous << " counterexamples "
                << report.counterexamples.size() << " solver_only_success_rate " << report.solver_only_success_rate
                << '\n'
                << "report " << config.output << '\n';
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
