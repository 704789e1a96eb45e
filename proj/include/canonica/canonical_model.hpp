#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "canonica/semigroup.hpp"

namespace canonica {

/// Coordinates X_l, one per gap l, with X_l = t^(gamma - l).
struct CanonicalChart {
  std::vector<int> variables;  // gap labels, increasing
  int gamma = -1;

  explicit CanonicalChart(const NumericalSemigroup& s);

  int nvars() const noexcept { return static_cast<int>(variables.size()); }
  int exponent_of(int label) const { return gamma - label; }
  /// exponents in variable order (decreasing, from gamma - 1 down to 0)
  std::vector<int> exponents() const;
  int label_index(int label) const;
};

/// A monomial in the chart variables, stored as its multiset of gap labels.
struct GradedMonomial {
  std::vector<int> labels;  // non-decreasing

  int degree() const noexcept { return static_cast<int>(labels.size()); }
  int value(const CanonicalChart& chart) const;
  std::string to_string() const;  // "X_1*X_5"

  auto operator<=>(const GradedMonomial&) const = default;
};

struct Sumset {
  std::vector<int> gamma_n;  // Gamma_n, increasing; lies in [0, n(gamma-1)]
  std::vector<int> a_n;      // (Gamma_n \ Gamma_{n-1}) n [0, gamma-1]; empty for n = 1
};

/// n-fold sumset of gamma - G. Throws TrivialSemigroup, InvalidArgument (n < 1).
Sumset gamma_sumset(const NumericalSemigroup& s, int n);

/// #(Gamma_n n [0, gamma]) - g, or 0 for symmetric S.
int sigma_n(const NumericalSemigroup& s, int n);

/// Closed form n(2g-2) - (n-1) eta + sigma_n + 1 - g.
std::int64_t h0_omega_n_closed(const NumericalSemigroup& s, int n);

/// Direct count of the value set of H^0(omega^n): #(Gamma_n n [0, gamma-1])
/// plus the block [gamma, n(gamma-1)] for non-symmetric S, #Gamma_n for
/// symmetric S. Throws InvariantViolation when it differs from the closed
/// form, Hyperelliptic, GenusTooSmall, InvalidArgument (n < 2).
std::int64_t h0_omega_n(const NumericalSemigroup& s, int n);

/// C(g+n-1, n) - n(2g-2) + (n-1) eta - sigma_n - 1 + g.
std::int64_t dim_ideal_formula(const NumericalSemigroup& s, int n);

/// #monomials - #distinct monomial values, by explicit enumeration.
/// Throws CombinatorialBlowup when C(g+n-1, n) > monomial_cap().
std::int64_t dim_ideal_oracle(const NumericalSemigroup& s, int n, bool parallel = false);

/// Largest monomial count any single degree may enumerate (5,000,000).
std::uint64_t monomial_cap();

/// Throws CombinatorialBlowup if degree-n monomials in the chart of s exceed
/// monomial_cap().
void check_monomial_budget(const NumericalSemigroup& s, int n);

}  // namespace canonica
