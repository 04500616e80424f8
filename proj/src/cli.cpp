#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>

#include "qeuler/errors.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/jobspec.hpp"
#include "qeuler/padic_l.hpp"
#include "qeuler/parse.hpp"
#include "qeuler/verify.hpp"
#include "qeuler/zeta.hpp"

namespace qeuler {

namespace {

using json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_field(header[i]);
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
}

// Enough decimal digits to show everything the bits carry.
int digits_for(long bits) { return static_cast<int>(std::min<long>(60, static_cast<long>(bits * 0.30103))); }

int cmd_euler(const JobSpec& job, std::ostream& os) {
  const auto [n0, n1] = parse_range(job.n);
  if (n0 < 0) throw DomainError("Euler polynomial degree must be >= 0");
  if (job.q.empty()) throw DomainError("--q is required");
  const Rational x = parse_exact(job.x);
  const XiSpec xi = parse_xi(job.xi);
  const QEulerParams<Cyclo> params(job.h, Cyclo(parse_exact(job.q)), xi.value(), xi.order);
  std::vector<std::vector<std::string>> rows;
  for (long n = n0; n <= n1; ++n) rows.push_back({std::to_string(n), euler_poly(n, x, params).to_string()});
  if (job.format == "csv") {
    write_csv(os, {"n", "value"}, rows);
    return kExitOk;
  }
  json j;
  j["schema"] = 1;
  j["command"] = "euler";
  j["params"] = {{"x", to_string(x)}, {"q", to_string(parse_exact(job.q))}, {"xi", xi.to_string()}, {"h", job.h}};
  j["rows"] = json::array();
  for (const auto& r : rows) j["rows"].push_back({{"n", std::stol(r[0])}, {"value", r[1]}});
  os << j.dump() << '\n';
  return kExitOk;
}

int cmd_l(const JobSpec& job, std::ostream& os) {
  if (job.s.empty()) throw DomainError("--s is required");
  const DirichletCharacter chi = parse_character(job.chi);
  json j;
  j["schema"] = 1;
  j["command"] = "l";
  j["mode"] = job.mode;
  std::vector<std::string> header;
  std::vector<std::string> row;
  if (job.mode == "complex") {
    if (job.q.empty()) throw DomainError("--q is required");
    const XiSpec xi = parse_xi(job.xi);
    const ComplexParams params = complex_params(job.h, BigFloat(parse_exact(job.q), job.bits), xi.value(), job.bits);
    SeriesOptions opts;
    opts.bits = job.bits;
    const SeriesResult r = l_function(parse_complex(job.s, job.bits), chi, params, opts);
    j["params"] = {{"s", job.s}, {"chi", job.chi}, {"q", job.q}, {"xi", xi.to_string()}, {"h", job.h}, {"bits", job.bits}};
    header = {"value", "tail_bound", "terms", "converged"};
    row = {r.value.to_string(digits_for(job.bits)), r.tail_bound.to_string(6), std::to_string(r.terms_used),
           r.converged ? "true" : "false"};
    j["value"] = row[0];
    j["tail_bound"] = row[1];
    j["terms"] = r.terms_used;
    j["converged"] = r.converged;
  } else if (job.mode == "padic") {
    if (!is_odd_prime(job.p)) throw DomainError(std::to_string(job.p) + " is not an odd prime (--p)");
    PadicLContext ctx;
    ctx.p = static_cast<unsigned long>(job.p);
    ctx.N = job.N;
    ctx.chi = chi;
    ctx.F = job.F ? job.F : std::lcm(job.p, static_cast<long>(chi.modulus()));
    ctx.h = job.h;
    ctx.q = parse_padic_q(job.q.empty() ? "1+p" : job.q, ctx.p);
    const XiSpec xi = parse_xi(job.xi);
    ctx.xi_order = xi.order;
    ctx.xi_exponent = xi.exponent;
    const PadicValue v = l_p(PadicExponent::of(parse_exact(job.s)), ctx);
    j["params"] = {{"s", job.s}, {"chi", job.chi}, {"p", job.p}, {"q", to_string(ctx.q)}, {"xi", xi.to_string()},
                   {"h", job.h}, {"F", ctx.F}, {"N", job.N}};
    header = {"value", "certified"};
    row = {v.value.with_precision(v.certified).to_string(), std::to_string(v.certified)};
    j["value"] = row[0];
    j["certified"] = v.certified;
  } else {
    throw DomainError("--mode must be complex or padic");
  }
  if (job.format == "csv") {
    write_csv(os, header, {row});
  } else {
    os << j.dump() << '\n';
  }
  return kExitOk;
}

long env_override(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return 0;
  return std::strtol(v, nullptr, 10);
}

int cmd_verify(const JobSpec& job, std::ostream& os, std::ostream& err) {
  if (!is_suite(job.suite)) throw DomainError("unknown suite '" + job.suite + "'");
  json overrides = job.grid;
  if (!overrides.is_object()) throw DomainError("grid overrides must be a JSON object");
  if (!overrides.contains("N") && env_override("QEULER_PADIC_N") > 0) overrides["N"] = env_override("QEULER_PADIC_N");
  if (!overrides.contains("bits") && env_override("QEULER_BITS") > 0) overrides["bits"] = env_override("QEULER_BITS");
  if (overrides.contains("p")) {
    const json ps = overrides["p"].is_array() ? overrides["p"] : json::array({overrides["p"]});
    for (const json& p : ps) {
      if (!p.is_number_integer() || !is_odd_prime(p.get<long>()))
        throw DomainError(p.dump() + " is not an odd prime (--p)");
    }
  }
  const Grid grid = expand(override_axes(default_axes(job.suite), overrides));
  const auto reports = run_suite(job.suite, grid);
  long pass = 0, fail = 0, skipped = 0;
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    if (r.status == "pass") ++pass;
    else if (r.status == "skipped") ++skipped;
    else ++fail;
    if (job.format == "csv") {
      rows.push_back({r.identity, r.params.dump(), r.lhs, r.rhs, to_string(r.metric), r.distance, r.bound,
                      r.pass ? "true" : "false", r.status, r.note});
    } else {
      os << to_json(r).dump() << '\n';
    }
  }
  if (job.format == "csv")
    write_csv(os, {"identity", "params", "lhs", "rhs", "metric", "distance", "bound", "pass", "status", "note"}, rows);
  err << job.suite << ": " << pass << " pass, " << fail << " fail, " << skipped << " skipped\n";
  if (fail) return kExitFailed;
  if (!reports.empty() && skipped == static_cast<long>(reports.size())) {
    err << "error: every grid point violates a precondition (first: " << reports.front().note << ")\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace

int run_job(const JobSpec& in, std::ostream& out, std::ostream& err) {
  try {
    const JobSpec job = resolve_defaults(in);
    if (job.format != "json" && job.format != "csv") throw DomainError("--format must be json or csv");
    if (job.bits < 53) throw DomainError("precision must be at least 53 bits");
    if (job.N < 1) throw DomainError("p-adic precision N must be >= 1");
    std::ofstream file;
    std::ostream* os = &out;
    if (!job.output.empty()) {
      file.open(job.output);
      if (!file) throw DomainError("cannot open output file '" + job.output + "'");
      os = &file;
    }
    switch (job.command) {
      case Command::euler: return cmd_euler(job, *os);
      case Command::l: return cmd_l(job, *os);
      case Command::verify: return cmd_verify(job, *os, err);
    }
    return kExitInvalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace qeuler
