// End-to-end checks of the twistgraph binary: fixture counts, exit codes,
// path output that revalidates from its serialization alone, and the
// byte-identical verify report across consecutive runs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "test_util.hpp"
#include "twist/serialize.hpp"

using testutil::es;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(TWIST_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int rc = pclose(pipe);
  result.status = WEXITSTATUS(rc);
  return result;
}

void write_edge_set(const std::string& path, const twist::EdgeSet& s) {
  std::ofstream out(path);
  out << twist::edge_set_to_json(s).dump();
}

}  // namespace

TEST_CASE("enumerate count fixtures") {
  CHECK(run_cli("enumerate --kind max-plane --n 4 --format count").out == "2\n");
  CHECK(run_cli("enumerate --kind matchings --n 4 --format count").out == "2\n");
  CHECK(run_cli("enumerate --kind max-plane --n 3 --format count").out == "1\n");
}

TEST_CASE("usage and validation errors exit with code 2") {
  CHECK(run_cli("enumerate --kind matchings --n 5 --format count").status == 2);
  CHECK(run_cli("enumerate --kind max-plane --n 10 --format count").status == 2);
  CHECK(run_cli("enumerate --kind nonsense --n 4").status == 2);
  CHECK(run_cli("path --mode theorem2 --from missing_a.json --to missing_b.json").status == 2);
}

TEST_CASE("path theorem2 emits JSON that revalidates on its own") {
  write_edge_set("cli_from_tmp.json", es(4, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}));
  write_edge_set("cli_to_tmp.json", es(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
  write_edge_set("cli_fixed_tmp.json", es(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}));

  const CliResult theorem2 = run_cli(
      "path --mode theorem2 --from cli_from_tmp.json --to cli_to_tmp.json --fixed cli_fixed_tmp.json");
  REQUIRE(theorem2.status == 0);
  const twist::FlipPath path = twist::flip_path_from_json(nlohmann::json::parse(theorem2.out));
  CHECK(path.length() == 1);
  CHECK(path.constructive);

  const CliResult theorem3 =
      run_cli("path --mode theorem3 --from cli_from_tmp.json --to cli_to_tmp.json");
  REQUIRE(theorem3.status == 0);
  CHECK(twist::flip_path_from_json(nlohmann::json::parse(theorem3.out)).constructive);

  const CliResult bfs = run_cli("path --mode bfs --from cli_from_tmp.json --to cli_to_tmp.json");
  REQUIRE(bfs.status == 0);
  const twist::FlipPath searched = twist::flip_path_from_json(nlohmann::json::parse(bfs.out));
  CHECK(searched.length() == 1);
  CHECK_FALSE(searched.constructive);

  const CliResult self = run_cli("path --mode theorem2 --from cli_from_tmp.json --to cli_from_tmp.json");
  REQUIRE(self.status == 0);
  CHECK(twist::flip_path_from_json(nlohmann::json::parse(self.out)).length() == 0);

  std::remove("cli_from_tmp.json");
  std::remove("cli_to_tmp.json");
  std::remove("cli_fixed_tmp.json");
}

TEST_CASE("verify emits byte-identical reports on consecutive runs") {
  const CliResult first = run_cli("verify --suite all --n-max 6");
  const CliResult second = run_cli("verify --suite all --n-max 6");
  CHECK(first.status == 0);
  CHECK(second.status == 0);
  CHECK(!first.out.empty());
  CHECK(first.out == second.out);
}

TEST_CASE("verify crossing at the acceptance scale") {
  CHECK(run_cli("verify --suite crossing --n-max 9").status == 0);
}

TEST_CASE("export produces DOT and JSON") {
  const CliResult dot = run_cli("export --what mp --n 4 --format dot");
  CHECK(dot.status == 0);
  CHECK(dot.out.find("graph flip_graph {") != std::string::npos);

  const CliResult matching = run_cli("export --what matching --n 6 --format json");
  CHECK(matching.status == 0);
  const nlohmann::json j = nlohmann::json::parse(matching.out);
  CHECK(j["nodes"].size() == 5);
  CHECK(j["constraint"].is_null());
}
