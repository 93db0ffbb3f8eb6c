#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cluspat/driver.hpp"

using namespace cluspat;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing fixture: " << path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

#ifndef CLUSPAT_GOLDEN_DIR
#define CLUSPAT_GOLDEN_DIR "tests/golden"
#endif

TEST_CASE("tables-a2 matches the checked-in golden file") {
  nlohmann::json report = cmd_tables_a2();
  std::string golden = read_file(std::string(CLUSPAT_GOLDEN_DIR) + "/tables_a2.json");
  CHECK(report.dump(2) + "\n" == golden);
}

TEST_CASE("mutate reports the node and flags repeated labels") {
  MutateConfig config{IntMatrix{{0, 1}, {-1, 0}}, Walk{2, 1}, VerifyLevel::checked, std::nullopt};
  nlohmann::json out = cmd_mutate(config);
  CHECK(out["node"]["C"]["entries"] == nlohmann::json::parse("[[-1,0],[0,-1]]"));
  CHECK(out["node"]["fpolys"][0] == "y1*y2 + y1 + 1");
  CHECK(out["node"]["H"]["entries"] == nlohmann::json::parse("[[-1,0],[0,-1]]"));
  CHECK(out["checked"] == true);
  CHECK(out["warnings"].empty());
  MutateConfig repeat{IntMatrix{{0, 1}, {-1, 0}}, Walk{1, 1}, VerifyLevel::fast, std::nullopt};
  CHECK(cmd_mutate(repeat)["warnings"].size() == 1);
}

TEST_CASE("check-duality covers every short walk") {
  DualityConfig config{IntMatrix{{0, 1}, {-1, 0}}, 5};
  nlohmann::json out = cmd_check_duality(config);
  CHECK(report_passed(out));
  CHECK(out["checks"].size() == 11);  // 1 empty + 2 per length 1..5
  CHECK(out["failed_walks"] == 0);
}

TEST_CASE("extend reports the blocks and the verification outcome") {
  ExtendConfig config{IntMatrix{{0, 2}, {-1, 0}}, Walk{2, 1}};
  nlohmann::json out = cmd_extend(config);
  CHECK(report_passed(out));
  CHECK(out["D"] == nlohmann::json::parse("[1,2,1,2]"));
  CHECK(out["block_identities_pass"] == true);
}

TEST_CASE("random suite is deterministic and tallies case shapes") {
  SuiteConfig config;
  config.cases = 40;
  nlohmann::json first = cmd_random_suite(config);
  nlohmann::json second = cmd_random_suite(config);
  CHECK(first.dump() == second.dump());
  CHECK(report_passed(first));
  CHECK(first["summary"]["failed"] == 0);
  CHECK(first["summary"]["zero_column_cases"].get<int>() > 0);
  CHECK(first["summary"]["nontrivial_symmetrizer_cases"].get<int>() > 0);
  // A different seed yields a different stream.
  config.seed = 8;
  CHECK(cmd_random_suite(config).dump() != first.dump());
}

TEST_CASE("sampled case stream matches the suite report") {
  SuiteConfig config;
  config.cases = 12;
  std::vector<std::pair<ExchangeMatrix, Walk>> cases = sample_suite_cases(config);
  nlohmann::json report = cmd_random_suite(config);
  REQUIRE(cases.size() == 12);
  for (int i = 0; i < 12; ++i) {
    CHECK(matrix_to_json(cases[i].first.matrix()) == report["cases"][i]["B"]);
    CHECK(nlohmann::json(cases[i].second.labels) == report["cases"][i]["walk"]);
  }
}

TEST_CASE("verify_identities accepts the A2 pattern") {
  CaseOutcome outcome = verify_identities(ExchangeMatrix(IntMatrix{{0, 1}, {-1, 0}}),
                                          Walk{2, 1, 2, 1, 2});
  CHECK(outcome.pass);
  CHECK(outcome.failures.empty());
}

TEST_CASE("matrix JSON switches to decimal strings beyond 2^53") {
  IntMatrix m(1, 2);
  m(0, 0) = BigInt("18014398509481984");   // 2^54
  m(0, 1) = BigInt("-9007199254740991");   // 1 - 2^53
  nlohmann::json j = matrix_to_json(m);
  CHECK(j["entries"][0][0].is_string());
  CHECK(j["entries"][0][0] == "18014398509481984");
  CHECK(j["entries"][0][1].is_number_integer());
  CHECK(matrix_from_json(j) == m);
}

TEST_CASE("polynomial JSON round trip") {
  VarSet yv = y_vars(2);
  SparsePoly p = SparsePoly::parse(yv, "3*y1^2*y2 + y1 - 7");
  nlohmann::json j = poly_to_json(p);
  CHECK(j[0]["coef"] == "3");  // leading term first
  CHECK(poly_from_json(yv, j) == p);
}

TEST_CASE("suite configuration is validated") {
  SuiteConfig config;
  config.rank_min = 0;
  CHECK_THROWS_AS(cmd_random_suite(config), InvalidArgument);
}
