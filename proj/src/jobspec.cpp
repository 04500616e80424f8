#include "qeuler/jobspec.hpp"

#include <cstdlib>

#include "qeuler/bigfloat.hpp"
#include "qeuler/errors.hpp"

namespace qeuler {

std::string to_string(Command c) {
  switch (c) {
    case Command::euler: return "euler";
    case Command::l: return "l";
    case Command::verify: return "verify";
  }
  return "?";
}

Command command_from_string(const std::string& s) {
  if (s == "euler") return Command::euler;
  if (s == "l") return Command::l;
  if (s == "verify") return Command::verify;
  throw DomainError("unknown command '" + s + "'");
}

nlohmann::ordered_json to_json(const JobSpec& job) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["command"] = to_string(job.command);
  j["n"] = job.n;
  j["x"] = job.x;
  j["q"] = job.q;
  j["xi"] = job.xi;
  j["h"] = job.h;
  j["chi"] = job.chi;
  j["mode"] = job.mode;
  j["s"] = job.s;
  j["p"] = job.p;
  j["F"] = job.F;
  j["bits"] = job.bits;
  j["N"] = job.N;
  j["suite"] = job.suite;
  j["grid"] = job.grid;
  j["format"] = job.format;
  j["output"] = job.output;
  return j;
}

JobSpec job_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw DomainError("job file must hold a JSON object");
  if (j.value("schema", 1) != 1) throw DomainError("unsupported job schema");
  JobSpec job;
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      const auto& v = it.value();
      if (k == "schema") continue;
      else if (k == "command") job.command = command_from_string(v.get<std::string>());
      else if (k == "n") job.n = v.get<std::string>();
      else if (k == "x") job.x = v.get<std::string>();
      else if (k == "q") job.q = v.get<std::string>();
      else if (k == "xi") job.xi = v.get<std::string>();
      else if (k == "h") job.h = v.get<long>();
      else if (k == "chi") job.chi = v.get<std::string>();
      else if (k == "mode") job.mode = v.get<std::string>();
      else if (k == "s") job.s = v.get<std::string>();
      else if (k == "p") job.p = v.get<long>();
      else if (k == "F") job.F = v.get<long>();
      else if (k == "bits") job.bits = v.get<long>();
      else if (k == "N") job.N = v.get<long>();
      else if (k == "suite") job.suite = v.get<std::string>();
      else if (k == "grid") job.grid = v;
      else if (k == "format") job.format = v.get<std::string>();
      else if (k == "output") job.output = v.get<std::string>();
      else throw DomainError("unknown job field '" + k + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed job file: ") + e.what());
  }
  return job;
}

namespace {

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const long out = std::strtol(v, &end, 10);
  if (*end != '\0' || out <= 0) throw DomainError(std::string(name) + " must be a positive integer");
  return out;
}

}  // namespace

JobSpec resolve_defaults(JobSpec job) {
  if (job.bits == 0) job.bits = env_long("QEULER_BITS", kDefaultBits);
  if (job.N == 0) job.N = env_long("QEULER_PADIC_N", 6);
  return job;
}

}  // namespace qeuler
