#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fewbranch/campaign.hpp"

using namespace fewbranch;
using nlohmann::json;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("fewbranch-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

CampaignConfig small_config(const char* theorem) {
  return CampaignConfig::from_json(json{{"theorem", theorem}, {"instances", 40}, {"master_seed", 7}, {"threads", 1}});
}

}  // namespace

TEST_CASE("FNV-1a reference vectors") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("config defaults and validation") {
  const auto c = CampaignConfig::from_json(json::object());
  CHECK(c.theorem == TheoremId::parse("t14"));
  CHECK(c.instances == 100);
  CHECK(c.n_min == 5);
  CHECK(c.n_max == 12);
  CHECK(c.strategies == std::vector<Strategy>{Strategy::LineGraph, Strategy::ClawRepair});
  CHECK(c.oracle_policy == OraclePolicy::Hypothesis);
  CHECK(c.output.empty());

  CHECK_THROWS_AS(CampaignConfig::from_json(json{{"instance", 5}}), std::invalid_argument);
  CHECK_THROWS_AS(CampaignConfig::from_json(json{{"theorem", "t99"}}), std::invalid_argument);
  CHECK_THROWS_AS(CampaignConfig::from_json(json{{"strategies", json::array({"linegraph", "cubic"})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CampaignConfig::from_json(json{{"n_min", 9}, {"n_max", 4}}), std::invalid_argument);
  CHECK_THROWS_AS(CampaignConfig::from_json(json{{"oracle_policy", "sometimes"}}), std::invalid_argument);
  CHECK_THROWS_AS(CampaignConfig::from_json(json::array()), std::invalid_argument);

  const auto round = CampaignConfig::from_json(small_config("conj:2").to_json());
  CHECK(round.to_json() == small_config("conj:2").to_json());
}

TEST_CASE("instance specs depend only on the config") {
  const auto c = small_config("t14");
  for (int i = 0; i < 40; ++i) {
    const GenSpec s = c.instance_spec(i);
    CHECK(s == small_config("t14").instance_spec(i));
    CHECK(s.n >= c.n_min);
    CHECK(s.n <= c.n_max);
    CHECK(s.p >= c.p_min);
    CHECK(s.p <= c.p_max);
    CHECK(s.strategy == c.strategies[static_cast<std::size_t>(i) % c.strategies.size()]);
  }
  auto other = c;
  other.master_seed = 8;
  CHECK_FALSE(other.instance_spec(0) == c.instance_spec(0));
}

TEST_CASE("campaign reports are reproducible") {
  auto c = small_config("t15");
  const json first = to_json(run_campaign(c));
  c.threads = 3;
  const json second = to_json(run_campaign(c));
  CHECK(first == second);
  CHECK(first.at("instance_count") == 40);
  CHECK(first.at("counterexamples").empty());
  CHECK(first.at("descent_violations") == 0);
  CHECK(first.at("spec_digest") == fnv1a_hex(c.to_json().dump()));
}

TEST_CASE("campaign counters are consistent") {
  for (const char* theorem : {"t14", "t15", "conj:1", "conj:3"}) {
    const auto report = run_campaign(small_config(theorem));
    CHECK(report.records.size() == 40);
    CHECK(report.counterexamples.empty());
    CHECK(report.descent_violations == 0);
    CHECK(report.leaf_oracle_failures == 0);
    int satisfied = 0, vacuous = 0;
    for (const auto& r : report.records) {
      satisfied += r.hypotheses.satisfied;
      vacuous += r.hypotheses.vacuous;
      if (r.hypotheses.satisfied) {
        CHECK(r.conclusion == std::optional<bool>(true));
      }
    }
    CHECK(satisfied == report.hypothesis_satisfied);
    CHECK(vacuous == report.vacuous);
    CHECK(report.solved_by_exchange <= report.hypothesis_satisfied);
  }
}

TEST_CASE("reports are written with a meta sidecar") {
  const auto dir = scratch_dir("report");
  auto c = small_config("t14");
  c.output = (dir / "report.json").string();
  const auto report = run_campaign(c);
  REQUIRE(std::filesystem::exists(dir / "report.json"));
  REQUIRE(std::filesystem::exists(dir / "report.json.meta.json"));
  std::ifstream in(dir / "report.json");
  CHECK(json::parse(in) == to_json(report));
  std::ifstream meta_in(dir / "report.json.meta.json");
  const json meta = json::parse(meta_in);
  CHECK(meta.contains("wall_seconds"));
  CHECK(meta.contains("finished_unix"));
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
  std::filesystem::remove_all(dir);
}
