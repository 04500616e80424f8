#pragma once

#include <json.hpp>
#include <string>

#include "qeuler/bigfloat.hpp"
#include "qeuler/cyclotomic.hpp"
#include "qeuler/padic.hpp"

namespace qeuler {

enum class Metric { exact_equal, padic_distance, complex_abs_error };

std::string to_string(Metric m);

/**
 * Outcome of one identity check. `params` is the full parameter map the
 * check was run with, so a report can be replayed.
 *
 * distance / bound per metric:
 *   exact_equal        "0" or "nonzero" / "0"
 *   padic_distance     "p^-v" with v = v_p(lhs - rhs) limited by precision / "p^-(N-c)"
 *   complex_abs_error  |lhs - rhs| / tail bounds + rounding slack
 */
struct VerificationReport {
  std::string identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string lhs;
  std::string rhs;
  Metric metric = Metric::exact_equal;
  std::string distance;
  std::string bound;
  bool pass = false;
  /// "pass", "fail" or "skipped".
  std::string status;
  std::string note;
};

nlohmann::ordered_json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::ordered_json& j);

VerificationReport exact_report(std::string identity, nlohmann::ordered_json params, const Cyclo& lhs,
                                const Cyclo& rhs);

/// Passes when v_p(lhs - rhs) >= required (both sides must be known that far).
template <class P>
VerificationReport padic_report(std::string identity, nlohmann::ordered_json params, const P& lhs, const P& rhs,
                                long required) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.metric = Metric::padic_distance;
  const Rational v = padic_distance(lhs, rhs);
  const std::string p = std::to_string(lhs.prime());
  r.distance = p + "^-" + (v.get_den() == 1 ? v.get_str() : "(" + v.get_str() + ")");
  r.bound = p + "^-" + std::to_string(required);
  r.pass = v >= required;
  r.status = r.pass ? "pass" : "fail";
  return r;
}

/// Passes when |lhs - rhs| <= bound.
VerificationReport complex_report(std::string identity, nlohmann::ordered_json params, const BigComplex& lhs,
                                  const BigComplex& rhs, const BigFloat& bound);

VerificationReport skipped_report(std::string identity, nlohmann::ordered_json params, std::string reason);

}  // namespace qeuler
