#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

using json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(WITTEN_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

json parse_payload(const std::string& text) {
  json j = json::parse(text);
  j.erase("timing_ms");
  return j;
}

json golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

}  // namespace

TEST_CASE("golden outputs are schema stable") {
  for (const auto& [args, file] :
       std::initializer_list<std::pair<const char*, const char*>>{
           {"roots A2 --json", "roots_a2.json"},
           {"roots B3 --json", "roots_b3.json"},
           {"dset G2 --json", "dset_g2.json"},
           {"tset G2 --json", "tset_g2.json"},
           {"identity a2 --n 1 --json", "identity_a2_n1.json"}}) {
    RunResult r = run_cli(args);
    CHECK(r.exit_code == 0);
    CHECK(parse_payload(r.output) == golden(file));
  }
}

TEST_CASE("exit code contract") {
  CHECK(run_cli("identity a2 --n 1").exit_code == 0);
  CHECK(run_cli("verify-eh A2").exit_code == 0);
  CHECK(run_cli("verify-de G2").exit_code == 0);
  CHECK(run_cli("dset E7 --json").exit_code == 1);   // budget refusal
  CHECK(run_cli("roots Z9 --json").exit_code == 2);  // invalid type
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("even-value A2").exit_code == 2);    // missing required --s
}

TEST_CASE("budget error is reported as a structured payload") {
  RunResult r = run_cli("dset E7 --json");
  json j = json::parse(r.output);
  CHECK(j["status"] == "error");
  CHECK(j["payload"]["error"] == "BudgetExceeded");
}

TEST_CASE("warm cache reproduces payloads") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "witten-cli-cache";
  fs::remove_all(dir);
  std::string base = "dset B3 --json --cache " + dir.string();
  json cold = parse_payload(run_cli(base).output);
  json warm = parse_payload(run_cli(base).output);
  CHECK(cold["payload"]["cached"] == false);
  CHECK(warm["payload"]["cached"] == true);
  cold["payload"].erase("cached");
  warm["payload"].erase("cached");
  CHECK(cold == warm);
  fs::remove_all(dir);
}

TEST_CASE("triangulate summarizes the band regions") {
  RunResult r = run_cli("triangulate B2 --json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["payload"]["total_volume"] == "1");
  CHECK(j["payload"]["band_regions"] == 4);
  CHECK(j["payload"]["denominators_within_expected"] == true);
}
