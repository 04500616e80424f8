#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qeuler/errors.hpp"
#include "qeuler/jobspec.hpp"

using namespace qeuler;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const JobSpec& job) {
  std::ostringstream out, err;
  const int code = run_job(job, out, err);
  return {code, out.str(), err.str()};
}

JobSpec euler_job(const std::string& n, const std::string& q) {
  JobSpec job;
  job.command = Command::euler;
  job.n = n;
  job.q = q;
  return job;
}

JobSpec verify_job(const std::string& suite, json grid) {
  JobSpec job;
  job.command = Command::verify;
  job.suite = suite;
  job.grid = std::move(grid);
  return job;
}

}  // namespace

TEST_CASE("job specs round trip through JSON") {
  JobSpec job = verify_job("theorem1", {{"p", {3, 5}}, {"n", {0}}});
  job.bits = 192;
  job.N = 7;
  job.format = "csv";
  const json j = to_json(job);
  CHECK(j["schema"] == 1);
  CHECK(job_from_json(j) == job);
  JobSpec l;
  l.command = Command::l;
  l.mode = "padic";
  l.s = "-1";
  l.chi = "quadratic:3";
  l.p = 5;
  l.q = "1+p";
  CHECK(job_from_json(to_json(l)) == l);
  CHECK_THROWS_AS(job_from_json({{"command", "euler"}, {"bogus", 1}}), DomainError);
  CHECK_THROWS_AS(job_from_json({{"command", "integrate"}}), DomainError);
  CHECK_THROWS_AS(job_from_json(json::array()), DomainError);
}

TEST_CASE("euler command in both formats") {
  const Run j = run(euler_job("0..4", "1/2"));
  REQUIRE(j.code == kExitOk);
  const json parsed = json::parse(j.out);
  REQUIRE(parsed["rows"].size() == 5);
  CHECK(parsed["rows"][1]["value"] == "-2/5");
  CHECK(parsed["rows"][4]["value"] == "112/935");
  JobSpec csv_job = euler_job("0..4", "1/2");
  csv_job.format = "csv";
  const Run c = run(csv_job);
  REQUIRE(c.code == kExitOk);
  std::istringstream lines(c.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,value");
  for (const auto& row : parsed["rows"]) {
    std::getline(lines, line);
    CHECK(line == std::to_string(row["n"].get<long>()) + "," + row["value"].get<std::string>());
  }
  JobSpec twisted = euler_job("1", "1/2");
  twisted.xi = "-1";
  CHECK(json::parse(run(twisted).out)["rows"][0]["value"] == "2");
}

TEST_CASE("l command") {
  JobSpec job;
  job.command = Command::l;
  job.mode = "padic";
  job.s = "-1";
  job.chi = "quadratic:3";
  job.p = 5;
  job.q = "1+p";
  job.N = 6;
  const Run r = run(job);
  REQUIRE(r.code == kExitOk);
  CHECK(json::parse(r.out)["value"] == "13111 mod 5^6");
  JobSpec complex_job;
  complex_job.command = Command::l;
  complex_job.s = "-1";
  complex_job.q = "1/2";
  const Run c = run(complex_job);
  REQUIRE(c.code == kExitOk);
  const json cj = json::parse(c.out);
  CHECK(cj["converged"] == true);
  CHECK(std::abs(std::stod(cj["value"].get<std::string>()) + 0.4) < 1e-11);
}

TEST_CASE("verify command exit codes") {
  const Run ok = run(verify_job("eq16", {{"p", {3}}, {"n", {1}}}));
  CHECK(ok.code == kExitOk);
  CHECK(ok.err.find("eq16: ") == 0);
  std::istringstream lines(ok.out);
  std::string line;
  long count = 0;
  while (std::getline(lines, line)) {
    CHECK(json::parse(line)["status"] == "pass");
    ++count;
  }
  CHECK(count > 0);
  CHECK(run(verify_job("eq16", {{"p", {3}}, {"n", {1}}, {"c", -1}})).code == kExitFailed);
  CHECK(run(verify_job("eq16", {{"p", {4}}})).code == kExitInvalid);
  CHECK(run(verify_job("no_such_suite", json::object())).code == kExitInvalid);
  CHECK(run(verify_job("distribution", {{"d", {2}}})).code == kExitInvalid);
  CHECK(run(verify_job("theorem1", {{"p", json::array()}})).code == kExitOk);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run(euler_job("1", "1")).code == kExitInvalid);
  CHECK(run(euler_job("-1", "1/2")).code == kExitInvalid);
  CHECK(run(euler_job("1", "")).code == kExitInvalid);
  JobSpec bad_format = euler_job("1", "1/2");
  bad_format.format = "xml";
  CHECK(run(bad_format).code == kExitInvalid);
  JobSpec low_bits = euler_job("1", "1/2");
  low_bits.bits = 8;
  CHECK(run(low_bits).code == kExitInvalid);
  JobSpec padic;
  padic.command = Command::l;
  padic.mode = "padic";
  padic.s = "-1";
  padic.p = 9;
  CHECK(run(padic).code == kExitInvalid);
  padic.p = 5;
  padic.q = "2";
  const Run r = run(padic);
  CHECK(r.code == kExitInvalid);
  CHECK(r.err.rfind("error: ", 0) == 0);
}
