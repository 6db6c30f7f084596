#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "cic/state_io.hpp"
#include "cic/states_zoo.hpp"
#include "helpers.hpp"

namespace {

#ifndef CIC_CLI_PATH
#error "CIC_CLI_PATH must point at the built cic binary"
#endif

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = cic::testing::temp_path("cli_out.txt");
  const std::string command = std::string(CIC_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  std::remove(out_path.c_str());
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("state subcommand reports the bell-state value as json") {
  const std::string state_path = cic::testing::temp_path("bell.json");
  cic::io::save_state_json(state_path, cic::bell_phi_plus());
  const RunResult result = run_cli("state --in " + state_path + " --seed 3");
  std::remove(state_path.c_str());
  REQUIRE(result.exit_code == 0);
  const nlohmann::json payload = nlohmann::json::parse(result.output);
  CHECK(std::abs(payload["value"].get<double>() - 1.0) < 1e-8);
  CHECK(payload["argmax_m"].size() == 3);
  CHECK(payload["diagnostics"]["starts"].get<int>() == 66);
}

TEST_CASE("state subcommand respects --side") {
  const std::string state_path = cic::testing::temp_path("cc.json");
  cic::io::save_state_json(state_path, cic::classically_correlated());
  const RunResult result = run_cli("state --in " + state_path + " --side backward");
  std::remove(state_path.c_str());
  REQUIRE(result.exit_code == 0);
  CHECK(std::abs(nlohmann::json::parse(result.output)["value"].get<double>() - 1.0) < 1e-8);
}

TEST_CASE("missing input file maps to the validation exit code") {
  const RunResult result = run_cli("state --in /nonexistent/state.json");
  CHECK(result.exit_code == 2);
}

TEST_CASE("invalid state maps to the validation exit code") {
  const std::string state_path = cic::testing::temp_path("bad.json");
  std::ofstream(state_path) << "{\"dim\": 2, \"re\": [[1.0, 0.0], [0.0, 1.0]]}";
  const RunResult result = run_cli("state --in " + state_path);
  std::remove(state_path.c_str());
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("validation error") != std::string::npos);
}

TEST_CASE("bad scan flags map to the validation exit code") {
  const RunResult result = run_cli("xxz --min 1 --max 0 --step 0.01 --out /tmp/never.csv");
  CHECK(result.exit_code == 2);
  const RunResult bad_link = run_cli("kitaev --link w --out /tmp/never.csv");
  CHECK(bad_link.exit_code == 2);
}

TEST_CASE("xxz scans are byte-identical across runs and emit all outputs") {
  const std::string csv_a = cic::testing::temp_path("xxz_a.csv");
  const std::string csv_b = cic::testing::temp_path("xxz_b.csv");
  const std::string svg = cic::testing::temp_path("xxz.svg");
  const std::string json = cic::testing::temp_path("xxz.json");
  const std::string args = "xxz --min -0.5 --max 0.5 --step 0.05 --threads 2";
  REQUIRE(run_cli(args + " --out " + csv_a + " --svg " + svg + " --json " + json).exit_code == 0);
  REQUIRE(run_cli(args + " --out " + csv_b).exit_code == 0);
  const std::string a = read_file(csv_a);
  CHECK(!a.empty());
  CHECK(a == read_file(csv_b));
  CHECK(a.substr(0, a.find('\n')) == "delta,eg,xx,zz,cic,susceptibility");
  CHECK(read_file(svg).find("<svg") == 0);
  const nlohmann::json scan = nlohmann::json::parse(read_file(json));
  CHECK(scan["model"] == "xxz");
  CHECK(scan["delta"].size() == 21);
  std::remove(csv_a.c_str());
  std::remove(csv_b.c_str());
  std::remove(svg.c_str());
  std::remove(json.c_str());
}

TEST_CASE("kitaev scan emits the documented columns") {
  const std::string csv = cic::testing::temp_path("kitaev.csv");
  const RunResult result = run_cli(
      "kitaev --min 0.56 --max 0.9 --step 0.02 --link z --tol 1e-5 --threads 2 --out " + csv);
  REQUIRE(result.exit_code == 0);
  const std::string text = read_file(csv);
  std::remove(csv.c_str());
  CHECK(text.substr(0, text.find('\n')) == "jz,jx,jy,correlator,cic,susceptibility,phase");
  CHECK(text.find("GappedAz") != std::string::npos);
}

TEST_CASE("config file mirrors the long options") {
  const std::string config = cic::testing::temp_path("scan.conf");
  const std::string csv = cic::testing::temp_path("conf.csv");
  std::ofstream(config) << "# demo configuration\nmin=-0.2\nmax=0.2\nstep=0.02\nout=" << csv
                        << "\n";
  const RunResult result = run_cli("xxz --config " + config);
  std::remove(config.c_str());
  REQUIRE(result.exit_code == 0);
  const std::string text = read_file(csv);
  std::remove(csv.c_str());
  // header + 21 grid rows
  CHECK(std::count(text.begin(), text.end(), '\n') == 22);
}

TEST_CASE("props subcommand runs a fast suite") {
  const RunResult result = run_cli("props --suite core --trials 10 --seed 5");
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.find("[PASS]") != std::string::npos);
  CHECK(result.output.find("FAIL") == std::string::npos);

  const RunResult bad = run_cli("props --suite bogus");
  CHECK(bad.exit_code == 2);
}
