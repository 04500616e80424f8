#include "qeuler/report.hpp"

#include "qeuler/errors.hpp"

namespace qeuler {

std::string to_string(Metric m) {
  switch (m) {
    case Metric::exact_equal: return "exact-equal";
    case Metric::padic_distance: return "p-adic-distance";
    case Metric::complex_abs_error: return "complex-abs-error";
  }
  return "?";
}

namespace {

Metric metric_from_string(const std::string& s) {
  if (s == "exact-equal") return Metric::exact_equal;
  if (s == "p-adic-distance") return Metric::padic_distance;
  if (s == "complex-abs-error") return Metric::complex_abs_error;
  throw DomainError("unknown metric '" + s + "'");
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["identity"] = r.identity;
  j["params"] = r.params;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["metric"] = to_string(r.metric);
  j["distance"] = r.distance;
  j["bound"] = r.bound;
  j["pass"] = r.pass;
  j["status"] = r.status;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.identity = j.at("identity").get<std::string>();
  r.params = j.at("params");
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  r.metric = metric_from_string(j.at("metric").get<std::string>());
  r.distance = j.at("distance").get<std::string>();
  r.bound = j.at("bound").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  r.status = j.at("status").get<std::string>();
  if (j.contains("note")) r.note = j.at("note").get<std::string>();
  return r;
}

VerificationReport exact_report(std::string identity, nlohmann::ordered_json params, const Cyclo& lhs,
                                const Cyclo& rhs) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.metric = Metric::exact_equal;
  r.pass = lhs == rhs;
  r.distance = r.pass ? "0" : "nonzero";
  r.bound = "0";
  r.status = r.pass ? "pass" : "fail";
  return r;
}

VerificationReport complex_report(std::string identity, nlohmann::ordered_json params, const BigComplex& lhs,
                                  const BigComplex& rhs, const BigFloat& bound) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  // Print enough digits that the bound is visible in the renderings.
  r.lhs = lhs.to_string(30);
  r.rhs = rhs.to_string(30);
  r.metric = Metric::complex_abs_error;
  const BigFloat d = abs(lhs - rhs);
  r.distance = d.to_string(6);
  r.bound = bound.to_string(6);
  r.pass = d <= bound;
  r.status = r.pass ? "pass" : "fail";
  return r;
}

VerificationReport skipped_report(std::string identity, nlohmann::ordered_json params, std::string reason) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.status = "skipped";
  r.pass = false;
  r.note = std::move(reason);
  return r;
}

}  // namespace qeuler
