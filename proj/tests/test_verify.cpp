#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "qeuler/verify.hpp"

using namespace qeuler;
using json = nlohmann::ordered_json;

namespace {

std::vector<VerificationReport> run_small(const std::string& suite, const json& overrides) {
  return run_suite(suite, expand(override_axes(default_axes(suite), overrides)));
}

void check_all_pass(const std::vector<VerificationReport>& reports) {
  long pass = 0;
  for (const auto& r : reports) {
    INFO(to_json(r).dump());
    CHECK(r.status != "fail");
    if (r.status == "pass") ++pass;
  }
  CHECK(pass > 0);
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(suite_names().size() == 10);
  for (const auto& s : suite_names()) CHECK(is_suite(s));
  CHECK_FALSE(is_suite("nonsense"));
}

TEST_CASE("small grids of every suite pass") {
  check_all_pass(run_small("functional_eq", {{"p", {5}}, {"N", {4}}}));
  check_all_pass(run_small("moments", {{"p", {3}}, {"N", {4}}, {"n", {0, 2}}}));
  check_all_pass(run_small("distribution", {{"n", {3}}, {"q", {"2/3"}}, {"h", {2}}}));
  check_all_pass(run_small("eq10_consistency", {{"n", {2}}, {"chi", {"quadratic:3"}}}));
  check_all_pass(run_small("interpolation_complex", {{"n", {1}}, {"q", {"1/2"}}}));
  check_all_pass(run_small("eq14", {{"n", {2}}, {"q", {"1/2"}}}));
  check_all_pass(run_small("eq15", {{"n", {1}}, {"q", {"7/10"}}}));
  check_all_pass(run_small("eq16", {{"p", {5}}, {"n", {0, 3}}}));
  check_all_pass(run_small("theorem1", {{"p", {3}}, {"n", {2}}}));
  check_all_pass(run_small("remark1", {{"p", {5}}, {"s", {-1}}}));
}

TEST_CASE("an empty axis gives an empty grid") {
  const Grid grid = expand(override_axes(default_axes("theorem1"), {{"p", json::array()}}));
  CHECK(grid.empty());
  CHECK(run_suite("theorem1", grid).empty());
}

TEST_CASE("expansion resolves symbols") {
  const Grid grid = expand({json{{"p", {5}}, {"F", {"3p"}}, {"a", {"all"}}, {"xi_order", {"p"}}}});
  REQUIRE(grid.size() == 12);
  std::set<long> residues;
  for (const auto& pt : grid) {
    CHECK(pt["F"] == 15);
    CHECK(pt["xi_order"] == 5);
    residues.insert(pt["a"].get<long>());
  }
  CHECK(residues == std::set<long>{1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13, 14});
  // First key varies slowest.
  const Grid order = expand({json{{"x", {1, 2}}, {"y", {3, 4}}}});
  REQUIRE(order.size() == 4);
  CHECK(order[1]["x"] == 1);
  CHECK(order[1]["y"] == 4);
}

TEST_CASE("runs are deterministic") {
  const json overrides = {{"p", {3}}, {"n", {0, 1}}};
  std::string first, second;
  for (const auto& r : run_small("eq16", overrides)) first += to_json(r).dump() + "\n";
  for (const auto& r : run_small("eq16", overrides)) second += to_json(r).dump() + "\n";
  CHECK(first == second);
  CHECK_FALSE(first.empty());
}

TEST_CASE("precondition violations are reported as skipped") {
  const auto reports = run_suite("distribution", {json{{"n", 1}, {"d", 2}, {"q", "1/2"}, {"xi", "1"}, {"h", 1}, {"x", 0}}});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == "skipped");
  CHECK_FALSE(reports[0].pass);
  CHECK_FALSE(reports[0].note.empty());
}

TEST_CASE("a negative loss allowance makes the p-adic checks fail") {
  const auto reports = run_small("theorem1", {{"p", {5}}, {"n", {1}}, {"c", {-1}}});
  REQUIRE_FALSE(reports.empty());
  for (const auto& r : reports) CHECK(r.status == "fail");
}

TEST_CASE("report JSON round trip") {
  for (const auto& r : run_small("eq15", {{"n", {1}}, {"q", {"1/2"}}})) {
    const VerificationReport back = report_from_json(to_json(r));
    CHECK(to_json(back).dump() == to_json(r).dump());
  }
}

TEST_CASE("coverage manifest") {
  REQUIRE_FALSE(coverage_manifest().empty());
  std::set<std::string> modules;
  for (const auto& entry : coverage_manifest()) {
    INFO(entry.op);
    modules.insert(entry.module);
    REQUIRE_FALSE(entry.suites.empty());
    std::set<std::string> kinds;
    for (const auto& suite : entry.suites) {
      CHECK(is_suite(suite));
      for (const auto& axes : default_axes(suite))
        if (axes.contains("kind"))
          for (const auto& k : axes["kind"]) kinds.insert(k.get<std::string>());
    }
    for (const auto& k : entry.kinds) CHECK(kinds.count(k) == 1);
  }
  CHECK(modules == std::set<std::string>{"complex-zeta", "euler-core", "padic-core", "padic-l"});
}
