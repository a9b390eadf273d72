#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Drives the installed CLI binary end to end. The binary path arrives in
// ORBICHOW_CLI_BIN (set by CMake).

#include <nlohmann/json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("orbichow_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_input(const std::string& name, const std::string& content) {
  const auto p = work_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("ORBICHOW_CLI_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "ORBICHOW_CLI_BIN must point at the CLI binary");
  const auto out_file = work_dir() / "stdout.txt";
  const auto err_file = work_dir() / "stderr.txt";
  const std::string command = std::string("\"") + bin + "\" " + args + " > \"" +
                              out_file.string() + "\" 2> \"" + err_file.string() + "\"";
  const int status = std::system(command.c_str());
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {exit_code, slurp(out_file), slurp(err_file)};
}

}  // namespace

TEST_CASE("ring on [pt/Z2] emits the group ring") {
  const auto input = write_input("bz2.json", R"({"abelian": [2]})");
  const auto result = run_cli("ring --input " + input.string());
  REQUIRE(result.exit_code == 0);
  const auto doc = json::parse(result.out);
  CHECK(doc.at("basis") == json::array({"e", "(1)"}));
  bool found = false;
  for (const auto& entry : doc.at("products"))
    if (entry.at("left") == "(1)" && entry.at("right") == "(1)") {
      CHECK(entry.at("value") == json::parse(R"({"e": {"[0]": 1}})"));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("verify exits 0 on a good instance and 1 on a corrupted table") {
  const auto input = write_input("bz3.json", R"({"abelian": [3]})");
  CHECK(run_cli("verify --input " + input.string()).exit_code == 0);

  const auto ring = run_cli("ring --input " + input.string());
  REQUIRE(ring.exit_code == 0);
  auto doc = json::parse(ring.out);
  doc["products"][0]["value"] = json::object();  // break e * e = e
  const auto tampered = write_input("bz3_tampered.json", doc.dump());
  const auto verdict = run_cli("verify --input " + tampered.string());
  CHECK(verdict.exit_code == 1);
  const auto report = json::parse(verdict.out);
  CHECK(report.at("ok") == false);
  CHECK(report.at("checks").at("identity") == false);
}

TEST_CASE("verify accepts a table produced by ring") {
  const auto input =
      write_input("c2z3.json", R"({"abelian": [3], "action": {"dim": 2, "characters": [[1],[2]]}})");
  const auto ring = run_cli("ring --input " + input.string());
  REQUIRE(ring.exit_code == 0);
  const auto table = write_input("c2z3_table.json", ring.out);
  const auto verdict = run_cli("verify --input " + table.string());
  CHECK(verdict.exit_code == 0);
  CHECK(json::parse(verdict.out).at("ok") == true);
}

TEST_CASE("poincare on the trivial group") {
  const auto input = write_input("triv.json", R"({"abelian": []})");
  const auto result = run_cli("poincare --input " + input.string());
  REQUIRE(result.exit_code == 0);
  CHECK(json::parse(result.out).at("poincare") ==
        json::parse(R"([{"age": "0", "count": 1}])"));
}

TEST_CASE("repeated runs are byte-identical") {
  const auto input =
      write_input("det.json", R"({"abelian": [4], "action": {"dim": 2, "characters": [[1],[3]]}})");
  for (const std::string cmd : {"inertia", "ring", "verify", "poincare", "moduli"}) {
    const auto first = run_cli(cmd + " --input " + input.string());
    const auto second = run_cli(cmd + " --input " + input.string());
    REQUIRE(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("cache hits reproduce the cold output") {
  const auto input = write_input("cached.json", R"({"abelian": [6]})");
  const auto cache = work_dir() / "cache";
  const std::string args = "ring --input " + input.string() + " --cache " + cache.string();
  const auto cold = run_cli(args);
  REQUIRE(cold.exit_code == 0);
  REQUIRE(fs::exists(cache));
  CHECK(!fs::is_empty(cache));
  const auto warm = run_cli(args);
  CHECK(warm.exit_code == 0);
  CHECK(warm.out == cold.out);
}

TEST_CASE("exit codes for bad input") {
  const auto garbage = write_input("garbage.json", "not json {");
  CHECK(run_cli("inertia --input " + garbage.string()).exit_code == 2);

  const auto missing = (work_dir() / "missing.json").string();
  CHECK(run_cli("inertia --input " + missing).exit_code == 2);

  const auto nonintegral =
      write_input("rr_bad.json", R"({"degree": 0, "monodromies": [[1,2],[1,2],[1,2]]})");
  const auto result = run_cli("rr --input " + nonintegral.string());
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("not an integer") != std::string::npos);

  const auto too_big = write_input("big.json", R"({"abelian": [50]})");
  CHECK(run_cli("inertia --input " + too_big.string() + " --max-group-order 10").exit_code == 2);
}

TEST_CASE("rr and roots round trips") {
  const auto rr = write_input("rr.json", R"({"degree": 0, "monodromies": [[1,2],[1,2],[0,1]]})");
  const auto result = run_cli("rr --input " + rr.string());
  REQUIRE(result.exit_code == 0);
  const auto doc = json::parse(result.out);
  CHECK(doc.at("pushforward_degree") == -1);
  CHECK(doc.at("h0") == 0);
  CHECK(doc.at("h1") == 0);

  const auto roots = write_input(
      "roots.json", R"({"free_rank": 1, "torsion": [4], "element": [2, 2], "r": 2})");
  const auto roots_result = run_cli("roots --input " + roots.string());
  REQUIRE(roots_result.exit_code == 0);
  CHECK(json::parse(roots_result.out).at("exists") == true);
}
