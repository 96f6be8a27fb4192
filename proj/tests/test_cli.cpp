#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "fareylab/farey.hpp"
#include "fareylab/serialize.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string path = "cli_out_" + std::to_string(counter++) + ".tmp";
  const std::string cmd =
      std::string(FAREYLAB_CLI_PATH) + " " + args + " > " + path + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  r.out = os.str();
  std::remove(path.c_str());
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::stringstream ss(s);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("farey subcommand streams the sequence") {
  const RunResult r = run_cli("farey --Q 5");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 10);
  CHECK(lines.front() == "1/5");
  CHECK(lines.back() == "1/1");
}

TEST_CASE("farey respects the progression restriction and count-only") {
  const RunResult r = run_cli("farey --Q 4 --d 2 --count-only");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n");
}

TEST_CASE("bad usage exits 2") {
  CHECK(run_cli("farey").exit_code == 2);
  CHECK(run_cli("farey --Q 0").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("gaps --Q 10 --format yaml").exit_code == 2);
}

TEST_CASE("gaps emits csv and json consistently") {
  const RunResult csv = run_cli("gaps --Q 4 --d 2");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "k,count\n1,2\n3,1\n");

  const RunResult json = run_cli("gaps --Q 4 --d 2 --format json");
  CHECK(json.exit_code == 0);
  const fareylab::GapHistogram h =
      fareylab::histogram_from_json(nlohmann::json::parse(json.out));
  CHECK(h.Q == 4);
  CHECK(h.d == 2);
  const fareylab::GapHistogram direct = fareylab::gap_numerator_counts(4, 2);
  CHECK(h.counts == direct.counts);
}

TEST_CASE("verify passes clean and fails under fault injection") {
  CHECK(run_cli("verify --Q-max 40").exit_code == 0);
  CHECK(run_cli("verify --Q-max 40 --inject-fault").exit_code == 1);
}

TEST_CASE("constant reports c(d, k) with an exact rational factor") {
  const RunResult r = run_cli("constant --d 1 --k 1");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("exact_factor").at("num").get<std::string>() == "3");
  CHECK(j.at("exact_factor").at("den").get<std::string>() == "1");
  CHECK(j.at("c").get<double>() == doctest::Approx(0.30396355092701331).epsilon(1e-12));
}

TEST_CASE("constant with a forced small K_max exits with the warning code") {
  CHECK(run_cli("constant --d 2 --k 3 --K-max 3").exit_code == 3);
}

TEST_CASE("regions lists tuples with vertices and pair sets") {
  const RunResult r = run_cli("regions --d 4 --k 1 --l 2");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.at("tuples").size() == 1);
  const auto& rec = j.at("tuples").at(0);
  CHECK(rec.at("l").get<int>() == 2);
  CHECK(rec.at("xs").get<std::vector<int>>() == std::vector<int>{1});
  CHECK(rec.at("area").at("num").get<std::string>() == "1");
  CHECK(rec.at("area").at("den").get<std::string>() == "6");
  CHECK(rec.at("vertices").size() >= 3);
}

TEST_CASE("worker count does not change output bytes") {
  const std::string job = "constant --d 2 --k 1 --convergence 100,200,400";
  const RunResult serial = run_cli(job + " --workers 1");
  const RunResult parallel = run_cli(job + " --workers 8");
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.out == parallel.out);
  CHECK(!serial.out.empty());
}

TEST_CASE("manifest digest matches the emitted bytes") {
  const std::string out = "cli_manifest_out.tmp";
  const std::string manifest = "cli_manifest.tmp";
  const RunResult r =
      run_cli("gaps --Q 30 --d 6 --out " + out + " --manifest " + manifest);
  CHECK(r.exit_code == 0);
  std::ifstream fo(out, std::ios::binary);
  std::ostringstream bytes;
  bytes << fo.rdbuf();
  std::ifstream fm(manifest);
  const auto j = nlohmann::json::parse(fm);
  CHECK(j.at("digest").get<std::string>() ==
        fareylab::fnv1a_digest(bytes.str()));
  CHECK(j.at("command").get<std::string>().find("gaps") != std::string::npos);
  std::remove(out.c_str());
  std::remove(manifest.c_str());
}
