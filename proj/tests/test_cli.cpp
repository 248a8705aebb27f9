#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FEWBRANCH_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path workdir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "fewbranch-cli-test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = workdir() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string gen_file(const std::string& spec) {
  const auto path = (workdir() / (spec + ".txt")).string();
  REQUIRE(run("gen " + spec + " --out " + path).code == 0);
  return path;
}

}  // namespace

TEST_CASE("solve prints status, branch count and parent array") {
  const Run r = run("solve " + gen_file("C6"));
  CHECK(r.code == 0);
  CHECK(r.out.find("status solved\n") != std::string::npos);
  CHECK(r.out.find("branch_vertices 0\n") != std::string::npos);

  const Run net = run("solve --trace " + gen_file("net"));
  CHECK(net.code == 0);
  CHECK(net.out.find("branch_vertices 1\n") != std::string::npos);

  const Run js = run("solve --json " + gen_file("line:K4"));
  CHECK(js.code == 0);
  const json j = json::parse(js.out);
  CHECK(j.at("status") == "solved");
  CHECK(j.at("branch_count") == 0);
}

TEST_CASE("solve reads standard input") {
  const Run r = run("solve - < " + gen_file("C6"));
  CHECK(r.code == 0);
  CHECK(r.out.find("branch_vertices 0") != std::string::npos);
}

TEST_CASE("solve exit codes") {
  CHECK(run("solve " + write_file("split.txt", "p 4 2\n0 1\n2 3\n")).code == 1);
  CHECK(run("solve " + write_file("garbage.txt", "hello\n")).code == 1);
  CHECK(run("solve /nonexistent/graph.txt").code == 1);
  CHECK(run("bogus").code == 1);

  const std::string stalled = gen_file("random:8:0.3:58");
  const Run r = run("solve " + stalled);
  CHECK(r.code == 2);
  CHECK(r.out.find("status stalled") != std::string::npos);
  const Run rescued = run("solve --oracle " + stalled);
  CHECK(rescued.code == 0);
  CHECK(rescued.out.find("status oracle-solved") != std::string::npos);
  CHECK(run("solve --move-cap 1 " + gen_file("random:11:0.3:18")).code == 2);
}

TEST_CASE("verify emits JSON") {
  const json c6 = json::parse(run("verify --theorem t14 " + gen_file("C6")).out);
  CHECK(c6.at("hypotheses").at("vacuous") == true);
  CHECK(c6.at("conclusion") == true);

  const Run claw_run = run("verify --theorem t14 " + gen_file("K1,3"));
  CHECK(claw_run.code == 0);
  const json claw = json::parse(claw_run.out);
  CHECK(claw.at("hypotheses").at("claw_free") == false);
  CHECK(claw.at("conclusion").is_null());

  const json net = json::parse(run("verify --theorem t15 " + gen_file("net")).out);
  CHECK(net.at("theorem") == "t15");
  CHECK(net.at("conclusion") == true);

  CHECK(run("verify --theorem t99 " + gen_file("C6")).code == 1);
}

TEST_CASE("gen output is deterministic") {
  const Run a = run("gen line:K4");
  const Run b = run("gen line:K4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("p 6 12\n", 0) == 0);
  CHECK(run("gen clawrepair:10:0.3:4").out == run("gen clawrepair:10:0.3:9 --seed 4").out);
  CHECK(run("gen nonsense:3").code == 1);
  CHECK(run("gen K5 --seed 3").code == 1);
}

TEST_CASE("campaign writes its report") {
  const std::string config =
      write_file("campaign.json", R"({"theorem": "conj:2", "instances": 20, "threads": 1})");
  const std::string report = (workdir() / "report.json").string();
  const Run r = run("campaign " + config + " --out " + report);
  CHECK(r.code == 0);
  CHECK(r.out.find("counterexamples 0") != std::string::npos);
  std::ifstream in(report);
  const json j = json::parse(in);
  CHECK(j.at("instance_count") == 20);
  CHECK(fs::exists(report + ".meta.json"));
  CHECK(run("campaign " + write_file("bad.json", R"({"theorm": "t14"})")).code == 1);
}
