#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "polysum/io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(POLYSUM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) {
    output += buf.data();
  }
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("hurwitz text output") {
  auto r = run_cli("hurwitz 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1/3\n");
  r = run_cli("hurwitz 75");
  CHECK(r.output == "7/3\n");
}

TEST_CASE("invalid input exits 2") {
  CHECK(run_cli("hurwitz 5").exit_code == 2);
  CHECK(run_cli("represent 2 5").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("witnesses 15 1").exit_code == 2);
}

TEST_CASE("represent reports the exception classification") {
  auto r = run_cli("represent 14 18 --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["count"] == 0);
  CHECK(j["ell"] == 507);
  CHECK(j["exception"]["square_class_3"] == true);

  r = run_cli("represent 14 3 --format json");
  json j2 = json::parse(r.output);
  CHECK(j2["count"].get<std::int64_t>() > 0);
  CHECK(j2["exception"].is_null());
}

TEST_CASE("verify-siegel-weil succeeds and reports the bound") {
  auto r = run_cli("verify-siegel-weil --bound 600 --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["ok"] == true);
  CHECK(j["bound"] == 600);
  CHECK(j["plus_mismatch"].is_null());

  // default bound is the full verification range
  auto full = run_cli("verify-siegel-weil");
  CHECK(full.exit_code == 0);
  CHECK(full.output.find("0..27648") != std::string::npos);
  CHECK(full.output.find("verified") != std::string::npos);
}

TEST_CASE("theta json output round-trips through the library schema") {
  auto r = run_cli("theta 14 600 --format json");
  CHECK(r.exit_code == 0);
  polysum::QSeries parsed = polysum::qseries_from_json(r.output);
  CHECK(polysum::to_json(parsed) + "\n" == r.output);
  CHECK(parsed.coefficient(75) == 1);
}

TEST_CASE("exceptions csv and determinism across thread counts") {
  auto r1 = run_cli("exceptions 8 2000 --threads 1 --format csv");
  auto r2 = run_cli("exceptions 8 2000 --threads 4 --format csv");
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);
  CHECK(r1.output.find("n,ell,square_class_3") == 0);
  CHECK(r1.output.find("4,60,0") != std::string::npos);
}

TEST_CASE("witnesses csv") {
  auto r = run_cli("witnesses 14 3 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("13,18,1") != std::string::npos);
  CHECK(r.output.find("37,168,1") != std::string::npos);
}

TEST_CASE("local json") {
  auto r = run_cli("local 8 --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["mod8_obstruction"] == 4);
  CHECK(j["missing_mod_8"] == json::array({4}));

  r = run_cli("local 14 18 --format json");
  json j2 = json::parse(r.output);
  CHECK(j2["locally_admissible"] == true);
  CHECK(j2["two_adic_surjective_k12"] == true);
}

TEST_CASE("sturm and theorem52 and the probe") {
  auto r = run_cli("sturm 576");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("221184") != std::string::npos);
  CHECK(r.output.find("27648") != std::string::npos);

  CHECK(run_cli("theorem52 300").exit_code == 0);

  auto p = run_cli("probe-sieve-identity 300 --format json");
  CHECK(p.exit_code == 0);
  json j = json::parse(p.output);
  CHECK(j["dilate9_term_matches"] == true);
  CHECK(j["printed_term_matches"] == false);
  CHECK(j["definitive"] == true);
}

TEST_CASE("survey text names the threshold") {
  auto r = run_cli("survey 14 2000");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("largest exception outside the square class") != std::string::npos);
}

}  // TEST_SUITE
