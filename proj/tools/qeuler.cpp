#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <regex>

#include "qeuler/errors.hpp"
#include "qeuler/jobspec.hpp"

namespace {

using json = nlohmann::ordered_json;
using qeuler::JobSpec;

// Grid flag values: "a..b" becomes a list of integers, plain integers become numbers.
json grid_values(const std::vector<std::string>& raw) {
  static const std::regex integer(R"(-?\d+)");
  static const std::regex range(R"((-?\d+)\.\.(-?\d+))");
  json out = json::array();
  for (const std::string& v : raw) {
    std::smatch m;
    if (std::regex_match(v, m, range)) {
      for (long i = std::stol(m[1]); i <= std::stol(m[2]); ++i) out.push_back(i);
    } else if (std::regex_match(v, integer)) {
      out.push_back(std::stol(v));
    } else {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted (h,q)-Euler numbers, their zeta and l-functions, and p-adic l-functions"};
  // "--h" is the parameter h, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.fallthrough();
  app.require_subcommand(0, 1);

  JobSpec job;
  std::string job_file;
  std::string write_job;
  app.add_option("--job", job_file, "Run a serialized job file");
  app.add_option("--write-job", write_job, "Write the resolved job to this file, then run it");
  app.add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", job.output, "Output file (default stdout)");

  auto* euler = app.add_subcommand("euler", "Table of E_{n,xi,q}^{(h,1)}(x) by the exact finite sum");
  euler->add_option("--n", job.n, "Degree or range a..b")->required();
  euler->add_option("--x", job.x, "Argument x (rational)");
  euler->add_option("--q", job.q, "q as a/b or a terminating decimal")->required();
  euler->add_option("--xi", job.xi, "Root of unity: 1, -1, zeta:<m> or zeta:<m>^<k>");
  euler->add_option("--h", job.h, "Integer h");

  auto* l = app.add_subcommand("l", "Twisted l-function value (complex series or p-adic)");
  l->add_option("--mode", job.mode, "complex or padic")->check(CLI::IsMember({"complex", "padic"}));
  l->add_option("--s", job.s, "Argument s")->required();
  l->add_option("--char", job.chi, "trivial, quadratic:<f> or f=<m>,index=<k>");
  l->add_option("--q", job.q, "q; p-adic mode also accepts 1+p");
  l->add_option("--xi", job.xi, "Root of unity");
  l->add_option("--h", job.h, "Integer h");
  l->add_option("--p", job.p, "Odd prime (p-adic mode)");
  l->add_option("--F", job.F, "Odd multiple of p and the modulus (default lcm)");
  l->add_option("--N", job.N, "p-adic precision (default $QEULER_PADIC_N or 6)");
  l->add_option("--bits", job.bits, "Complex precision in bits (default $QEULER_BITS or 128)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite; JSON-lines reports");
  verify->add_option("--suite", job.suite, "Suite name")->required();
  std::string grid_json;
  verify->add_option("--grid", grid_json, "JSON object of axis overrides");
  std::map<std::string, std::vector<std::string>> flags;
  for (const char* key : {"p", "N", "n", "q", "chi", "xi", "xi_order", "h", "s", "F", "a", "d", "x", "level", "c",
                          "kind", "bits", "f"}) {
    verify->add_option(std::string("--") + key, flags[key], std::string("Override the ") + key + " axis")
        ->allow_extra_args(false);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qeuler::kExitInvalid;
  }

  try {
    if (!job_file.empty()) {
      if (!app.get_subcommands().empty()) throw qeuler::DomainError("--job cannot be combined with a subcommand");
      std::ifstream in(job_file);
      if (!in) throw qeuler::DomainError("cannot read job file '" + job_file + "'");
      job = qeuler::job_from_json(json::parse(in));
    } else if (euler->parsed()) {
      job.command = qeuler::Command::euler;
    } else if (l->parsed()) {
      job.command = qeuler::Command::l;
    } else if (verify->parsed()) {
      job.command = qeuler::Command::verify;
      if (!grid_json.empty()) job.grid = json::parse(grid_json);
      for (const auto& [key, values] : flags)
        if (!values.empty()) job.grid[key] = grid_values(values);
    } else {
      std::cerr << app.help();
      return qeuler::kExitInvalid;
    }
    if (!write_job.empty()) {
      std::ofstream out(write_job);
      if (!out) throw qeuler::DomainError("cannot write job file '" + write_job + "'");
      out << qeuler::to_json(qeuler::resolve_defaults(job)).dump(2) << '\n';
    }
  } catch (const qeuler::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qeuler::kExitInvalid;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qeuler::kExitInvalid;
  }
  return qeuler::run_job(job, std::cout, std::cerr);
}
