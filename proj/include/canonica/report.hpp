#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "canonica/semigroup.hpp"

namespace canonica {

struct ReportOptions {
  int degree = 3;       // dim I_n and Betti data for n = 2..degree
  bool timing = false;  // add timing_ms (makes output run-dependent)
};

/// Discrepancy codes attached to reports.
namespace warning_code {
inline constexpr const char* kQuadricRange = "DISCREPANCY_QUADRIC_RANGE";
inline constexpr const char* kCubicConstant = "DISCREPANCY_CUBIC_CONSTANT";
inline constexpr const char* kFamilyMember = "DISCREPANCY_FAMILY_MEMBER";
inline constexpr const char* kListIncomplete = "DISCREPANCY_LIST_INCOMPLETE";
inline constexpr const char* kTripleUnclassified = "TRIPLE_UNCLASSIFIED";
inline constexpr const char* kTripleAmbiguous = "TRIPLE_AMBIGUOUS";
inline constexpr const char* kFormulaOracle = "FORMULA_ORACLE_MISMATCH";
inline constexpr const char* kNoContributor = "NO_CLIFFORD_CONTRIBUTOR";
}  // namespace warning_code

/// Full report for one semigroup. Sections whose preconditions fail are left
/// null and listed under "errors" with the error kind; the call itself only
/// throws for programming errors (InvariantViolation) and bad options.
nlohmann::json analyze(const NumericalSemigroup& s, const ReportOptions& opts = {});

/// True when the report's "errors" array holds an entry for `section`.
bool has_section_error(const nlohmann::json& report, const std::string& section);

/// Aligned text rendering of a report.
std::string render_text(const nlohmann::json& report);

/// Warning codes of a report, in order.
std::vector<std::string> warning_codes(const nlohmann::json& report);

}  // namespace canonica
