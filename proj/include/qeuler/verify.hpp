#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qeuler/report.hpp"

namespace qeuler {

using GridPoint = nlohmann::ordered_json;
using Grid = std::vector<GridPoint>;

/// functional_eq, moments, distribution, eq10_consistency, interpolation_complex,
/// eq14, eq15, eq16, theorem1, remark1.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/**
 * Default axes of a suite. Each element maps parameter names to arrays of
 * values; the grid is the concatenation of their Cartesian products.
 * Symbolic values are resolved per point by expand():
 *   xi_order  "p"               the prime of the point
 *   F         "<k>p", "lcm"     k p, or lcm(p, modulus of chi)
 *   a         "all"             every admissible residue for F (and p)
 */
std::vector<nlohmann::ordered_json> default_axes(const std::string& suite);

/// Replaces (or adds) the axes named in `overrides` in every axis set.
/// Scalars in `overrides` are single-value axes.
std::vector<nlohmann::ordered_json> override_axes(std::vector<nlohmann::ordered_json> axes,
                                                  const nlohmann::ordered_json& overrides);

/// Cartesian products in key order (first key slowest), symbols resolved.
Grid expand(const std::vector<nlohmann::ordered_json>& axes);

/// One report for one point. Precondition violations give a skipped report.
VerificationReport run_point(const std::string& suite, const GridPoint& point);

/// One report per point, in grid order.
std::vector<VerificationReport> run_suite(const std::string& suite, const Grid& grid);

/// run_suite(suite, expand(default_axes(suite))).
std::vector<VerificationReport> run_default_suite(const std::string& suite);

struct CoverageEntry {
  std::string module;
  std::string op;
  std::vector<std::string> suites;
  /// Values of "kind" that exercise the op; empty means every point of the suites.
  std::vector<std::string> kinds;
};

/// Which suites exercise each operation of the computational modules.
const std::vector<CoverageEntry>& coverage_manifest();

}  // namespace qeuler
