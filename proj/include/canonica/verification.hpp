#pragma once

#include <string>
#include <vector>

#include "canonica/semigroup.hpp"

namespace canonica {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
  bool strict_only = false;  // gates the exit status only under --strict-paper
};

struct CheckOptions {
  int max_degree = 5;           // formula = oracle and generation for n = 2..max_degree
  bool sheaf_identities = true;  // exhaustive Riemann-Roch / cliff identity
};

/// Every per-semigroup property the scan can assert. Checks that do not apply
/// to s (wrong genus, hyperelliptic, ...) are omitted rather than passed.
std::vector<Check> property_checks(const NumericalSemigroup& s, const CheckOptions& opts = {});

/// Checks that need the whole genus at once: enumeration count against the
/// subset filter, and the lexicographic order.
std::vector<Check> genus_checks(int genus, const std::vector<NumericalSemigroup>& all);

/// Named check for the family: clifford_index = alpha - 2.
Check family_check(int alpha);

}  // namespace canonica
