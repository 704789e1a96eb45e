#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "canonica/semigroup.hpp"

namespace canonica {

/// F = O<1, t^a_1, ..., t^a_n> described by the gap values it acquires at
/// the cusp (Delta, S-closed) and its top exponent a_max.
struct MonomialSheafModel {
  std::vector<int> delta;  // increasing
  int a_max = 0;

  bool operator==(const MonomialSheafModel&) const = default;
};

/// Throws InvalidModel naming the failed condition.
void validate(const NumericalSemigroup& s, const MonomialSheafModel& f);

struct SheafInvariants {
  int deg = 0;
  int h0 = 0;
  int h1 = 0;
  int cliff = 0;
};

/// deg = a_max + #Delta, h0 = #((S u Delta) n [0, a_max]),
/// h1 = #((G \ Delta) n [a_max+1, gamma]). Riemann-Roch is checked on every
/// call (InvariantViolation).
SheafInvariants sheaf_invariants(const NumericalSemigroup& s, const MonomialSheafModel& f);

/// #((G \ E) n [1, a]) - #(S n [1, a]) + #((E \ S) n [a+1, gamma]) with
/// E \ S read as Delta and a as a_max.
int cliff_paper_formula(const NumericalSemigroup& s, const MonomialSheafModel& f);

struct Extremum {
  int value = 0;
  MonomialSheafModel witness;
};

struct BrillNoether {
  Extremum gonality;
  std::optional<Extremum> clifford;  // nullopt: no model has h0, h1 >= 2
  bool bpf_g13 = false;              // gonality 3 and 3 in S
  std::uint64_t models = 0;
};

enum class SearchMode { Serial, Parallel };

/// Exhaustive search over valid models. Witness tie-break: smallest value,
/// then smallest a_max, then lexicographically least Delta. Throws
/// TrivialSemigroup, CombinatorialBlowup.
BrillNoether brill_noether(const NumericalSemigroup& s, SearchMode mode = SearchMode::Parallel);

std::optional<Extremum> clifford_index(const NumericalSemigroup& s);
Extremum gonality(const NumericalSemigroup& s);

/// Calls fn on every valid model (Delta from the naive subset filter).
void for_each_model(const NumericalSemigroup& s,
                    const std::function<void(const MonomialSheafModel&)>& fn);

struct KunzFamilyMember {
  NumericalSemigroup semigroup;
  std::vector<int> generators;
  std::vector<int> stated_generators;  // the generator list as written
  std::optional<std::string> note;     // set when the two differ
};

/// <alpha, alpha(alpha-2)+3, ..., alpha(alpha-1)-1, alpha(alpha-1)+1>.
/// For alpha = 3 that list is <3,7>, which is symmetric with gamma = 11,
/// so <3,7,11> is returned with a note. Checks gamma = (2 alpha - 4) alpha + 2,
/// pseudo-symmetry and the block structure of gaps and elements
/// (InvariantViolation). Throws AlphaTooSmall.
KunzFamilyMember kunz_family(int alpha);

/// The generator list as written for the family, without correction.
std::vector<int> kunz_family_stated_generators(int alpha);

}  // namespace canonica
