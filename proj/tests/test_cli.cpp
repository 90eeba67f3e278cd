#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cli.hpp"
#include "conehodge/catalog.hpp"
#include "conehodge/table_io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  RunResult result;
  result.code = conehodge::cli::run(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

json payload_of(const RunResult& result) { return json::parse(result.out); }

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("oracle hodge prints the exact vector") {
  const auto result = run_cli({"oracle", "hodge", "--n", "2", "--p", "1", "--m", "0", "--no-header"});
  REQUIRE(result.code == 0);
  const json env = payload_of(result);
  CHECK(env["results"]["kind"] == "oracle-hodge");
  CHECK(env["results"]["h"] == json::array({0, 1, 0}));
  CHECK(env["tool_version"] == "0.1.0");
}

TEST_CASE("lcdef both paths agree on the Segre example") {
  const auto result =
      run_cli({"cone", "lcdef", "--variety", "P1xP2@1,1", "--method", "both", "--no-header"});
  REQUIRE(result.code == 0);
  const json env = payload_of(result);
  CHECK(env["results"]["agreement"] == true);
  REQUIRE(env["results"]["items"].size() == 2);
  CHECK(env["results"]["items"][0]["c"] == 1);
  CHECK(env["results"]["items"][1]["c"] == 1);
}

TEST_CASE("classical lcdef reports the embedded dimension") {
  const auto result = run_cli(
      {"cone", "lcdef", "--variety", "P1xP2@1,1", "--method", "classical", "--no-header"});
  REQUIRE(result.code == 0);
  const json env = payload_of(result);
  CHECK(env["results"]["c"] == 1);
  CHECK(env["results"]["embedded_lcd"] == 3);
}

TEST_CASE("depth vector of the quadric cone through the CLI") {
  const auto result = run_cli({"cone", "depth", "--variety", "P1@2", "--no-header"});
  REQUIRE(result.code == 0);
  const json env = payload_of(result);
  for (const auto& entry : env["results"]["entries"]) {
    CHECK(entry["depth"] == 2);
    CHECK(entry["at_least"] == false);
  }
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::vector<std::string>> commands = {
      {"cone", "lcdef", "--variety", "P1xP2@1,1", "--method", "both", "--no-header"},
      {"cone", "kgroups", "--variety", "P2", "--no-header"},
      {"cone", "depth", "--variety", "P1@2", "--no-header"},
      {"catalog", "table", "--variety", "P1xP1@2,1", "--no-header"},
      {"check", "vanishing", "--variety", "P2", "--no-header"},
  };
  for (const auto& argv : commands) {
    const auto first = run_cli(argv);
    const auto second = run_cli(argv);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({"cone", "lcdef"}).code == 2);                              // missing --variety
  CHECK(run_cli({"cone", "lcdef", "--variety", "Q5"}).code == 2);           // bad selector
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({"cone", "lcdef", "--variety", "P2", "--method", "bogus"}).code == 2);
  CHECK(run_cli({"oracle", "hodge", "--n", "2"}).code == 2);                // missing --p
  CHECK(run_cli({"cone", "depth", "--variety", "missing_file.json"}).code == 2);
}

TEST_CASE("window overrides below the computed minimum are refused") {
  const auto result = run_cli({"cone", "depth", "--variety", "P2", "--window", "4"});
  CHECK(result.code == 2);
  CHECK(result.err.find("minimum") != std::string::npos);
  CHECK(run_cli({"cone", "depth", "--variety", "P2", "--window", "12", "--no-header"}).code == 0);
}

TEST_CASE("help exits zero") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"cone", "--help"}).code == 0);
}

TEST_CASE("corrupted table files yield violations and exit 1") {
  using namespace conehodge;
  auto [table, op] = make_catalog_table(parse_selector("P2"));
  (*table.betti)[2] = 2;  // betti-sum violation
  const std::string path = temp_path("corrupt.json");
  save_table_file(path, table, op);

  const auto result = run_cli({"cone", "lcdef", "--variety", path, "--no-header"});
  CHECK(result.code == 1);
  const json env = payload_of(result);
  REQUIRE_FALSE(env["violations"].empty());
  CHECK(env["violations"][0]["code"] == "betti-sum");
  std::remove(path.c_str());
}

TEST_CASE("catalog table round-trips through a file") {
  using namespace conehodge;
  const std::string path = temp_path("p1xp2.json");
  const auto save = run_cli({"catalog", "table", "--variety", "P1xP2@1,1", "--no-header", "-o", path});
  REQUIRE(save.code == 0);
  const auto loaded = load_table_file(path);
  CHECK(loaded.table.name == "P1xP2@1,1");
  CHECK(loaded.report.empty());

  // Feed the file back into an analysis.
  const auto result = run_cli({"cone", "depth", "--variety", path, "--no-header"});
  CHECK(result.code == 0);
  std::remove(path.c_str());
}

TEST_CASE("kgroups command emits every requested series") {
  const auto result = run_cli({"cone", "kgroups", "--variety", "P1@2", "--max-l", "4",
                               "--classical", "--no-header"});
  REQUIRE(result.code == 0);
  const json env = payload_of(result);
  const auto& items = env["results"]["items"];
  REQUIRE(items.size() == 5);  // K_0 then K_-1..K_-4
  CHECK(items[0]["group"] == "K_0");
  CHECK(items[0]["free_rank"] == 1);
  CHECK(items[0].contains("pic"));
  CHECK(items[4]["group"] == "K_-4");
  CHECK(items[4]["structurally_empty"] == true);
}

TEST_CASE("vanishing audits are silent on catalogs") {
  const auto result = run_cli({"check", "vanishing", "--variety", "P3@2", "--no-header"});
  REQUIRE(result.code == 0);
  const json env = payload_of(result);
  for (const auto& audit : env["results"]["items"]) {
    CHECK(audit["findings"].empty());
  }
}

TEST_CASE("predubois and seminormal checks answer directly") {
  auto result = run_cli({"check", "predubois", "--variety", "P1xP1@1,1", "--no-header"});
  REQUIRE(result.code == 0);
  CHECK(payload_of(result)["results"]["display"] == "all");

  result = run_cli({"check", "seminormal", "--variety", "P2", "--no-header"});
  REQUIRE(result.code == 0);
  CHECK(payload_of(result)["results"]["seminormal"] == true);
}

TEST_CASE("markdown and csv renderings stay renderable") {
  const auto md = run_cli({"cone", "depth", "--variety", "P1@2", "--format", "markdown",
                           "--no-header"});
  REQUIRE(md.code == 0);
  CHECK(md.out.find("| k | depth | witness |") != std::string::npos);

  const auto csv = run_cli({"cone", "depth", "--variety", "P1@2", "--format", "csv", "--no-header"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("k,depth,at_least,witness", 0) == 0);

  const auto sweep = run_cli({"oracle", "hodge", "--n", "1", "--sweep", "--max-m", "3",
                              "--format", "csv", "--no-header"});
  REQUIRE(sweep.code == 0);
  CHECK(sweep.out.rfind("n,p,q,m,dim", 0) == 0);
}

TEST_CASE("the header line is present by default and suppressible") {
  const auto with_header = run_cli({"check", "seminormal", "--variety", "P1"});
  REQUIRE(with_header.code == 0);
  CHECK(with_header.out.rfind("# conehodge", 0) == 0);
  const auto without = run_cli({"check", "seminormal", "--variety", "P1", "--no-header"});
  CHECK(without.out.rfind("{", 0) == 0);
}

TEST_CASE("CONE_HODGE_WINDOW widens catalog windows") {
  setenv("CONE_HODGE_WINDOW", "14", 1);
  const auto result = run_cli({"cone", "depth", "--variety", "P1@2", "--no-header"});
  unsetenv("CONE_HODGE_WINDOW");
  REQUIRE(result.code == 0);
  CHECK(payload_of(result)["inputs"]["window"] == 14);

  setenv("CONE_HODGE_WINDOW", "2", 1);  // below the minimum
  const auto too_small = run_cli({"cone", "depth", "--variety", "P1@2", "--no-header"});
  unsetenv("CONE_HODGE_WINDOW");
  CHECK(too_small.code == 2);
}

TEST_CASE("cone dubois selects a single complex with --k") {
  const auto result = run_cli({"cone", "dubois", "--variety", "P1@2", "--k", "2", "--no-header"});
  REQUIRE(result.code == 0);
  const json env = payload_of(result);
  CHECK(env["results"]["kind"] == "cone-dubois");
  CHECK(env["results"]["k"] == 2);
  const auto all = run_cli({"cone", "dubois", "--variety", "P1@2", "--no-header"});
  CHECK(payload_of(all)["results"]["items"].size() == 3);
  CHECK(run_cli({"cone", "dubois", "--variety", "P1@2", "--k", "7"}).code == 2);
}

TEST_CASE("catalog manifest lists the presets") {
  const auto result = run_cli({"catalog", "manifest", "--no-header"});
  REQUIRE(result.code == 0);
  const json manifest = payload_of(result);
  CHECK(manifest.contains("segre-threefold"));
  CHECK(manifest["P2"]["factors"] == json::array({2}));
}
