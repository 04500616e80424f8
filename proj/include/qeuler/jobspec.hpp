#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>

namespace qeuler {

enum class Command { euler, l, verify };

std::string to_string(Command c);
Command command_from_string(const std::string& s);

/**
 * One CLI run. Zero `bits` / `N` mean "take the default" (environment
 * variables QEULER_BITS and QEULER_PADIC_N, else 128 bits and N = 6);
 * resolve_defaults() fills them in so a written job file no longer
 * depends on the environment.
 */
struct JobSpec {
  Command command = Command::euler;
  // euler
  std::string n = "0";
  std::string x = "0";
  // shared parameters
  std::string q;
  std::string xi = "1";
  long h = 1;
  std::string chi = "trivial";
  // l
  std::string mode = "complex";
  std::string s;
  long p = 0;
  long F = 0;
  // precision
  long bits = 0;
  long N = 0;
  // verify
  std::string suite;
  nlohmann::ordered_json grid = nlohmann::ordered_json::object();
  // output
  std::string format = "json";
  std::string output;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

nlohmann::ordered_json to_json(const JobSpec& job);
/// Throws DomainError on unknown fields or wrong types.
JobSpec job_from_json(const nlohmann::ordered_json& j);

JobSpec resolve_defaults(JobSpec job);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

/// Runs the job, writing results to `out` and diagnostics to `err`.
int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace qeuler
