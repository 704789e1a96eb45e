#pragma once

// Data-parallel kernels. Each has a serial reference that the tests and
// canonica_bench compare against the OpenMP version.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "canonica/semigroup.hpp"

namespace canonica {

// ---------------------------------------------------------------------------
// Monomial evaluation: which values sum_j e[i_j] occur over all degree-n
// monomials. Result has size n * max(e) + 1; entry v is 1 when v is hit.

std::vector<unsigned char> monomial_value_table_serial(std::span<const int> exps, int n);
std::vector<unsigned char> monomial_value_table_parallel(std::span<const int> exps, int n);

// ---------------------------------------------------------------------------
// Sheaf-model search.
//
// A gap subset Delta is stored as a bitmask over gap indices (bit i is the
// i-th smallest gap), so genus must be <= 64.

struct GapPoset {
  std::vector<int> gaps;
  std::vector<int> gap_index;        // on [0, gamma]; -1 for elements of S
  std::vector<std::uint64_t> above;  // gaps l_i + s, s in S \ {0}
  std::vector<std::uint64_t> below;  // gaps l_i - s, s in S \ {0}
  int gamma = -1;

  explicit GapPoset(const NumericalSemigroup& s);

  bool closed(std::uint64_t delta) const;
  /// Largest minimal element of Delta (0 for the empty set).
  int max_minimal(std::uint64_t delta) const;
};

/// Reference: filter all 2^g subsets. Throws CombinatorialBlowup for g > 24.
std::vector<std::uint64_t> closed_gap_sets_naive(const GapPoset& poset);

/// Up-sets of the gap poset by depth-first search over gaps in decreasing
/// order. Same set as the naive filter, in a different order. Throws
/// CombinatorialBlowup past `cap` sets.
std::vector<std::uint64_t> closed_gap_sets(const GapPoset& poset,
                                           std::size_t cap = 50'000'000);

/// lexicographic comparison of the sorted gap lists encoded by two masks
bool delta_lex_less(std::uint64_t a, std::uint64_t b);

struct ModelChoice {
  int value = 0;
  int a_max = 0;
  std::uint64_t delta = 0;
};
/// Total order used for witnesses: value, then a_max, then Delta.
bool better(const ModelChoice& x, const ModelChoice& y);

struct ModelSearch {
  std::optional<ModelChoice> gonality;  // min deg with h0 >= 2
  std::optional<ModelChoice> clifford;  // min cliff with h0, h1 >= 2
  std::uint64_t models = 0;             // valid (Delta, a_max) pairs seen
};

ModelSearch sweep_models_serial(const NumericalSemigroup& s, const GapPoset& poset,
                                std::span<const std::uint64_t> deltas);
ModelSearch sweep_models_parallel(const NumericalSemigroup& s, const GapPoset& poset,
                                  std::span<const std::uint64_t> deltas);

// ---------------------------------------------------------------------------

/// body(i) for i in [0, n) on `threads` threads (<= 0: OpenMP default).
/// The first exception thrown by any iteration is rethrown after the loop.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

int default_threads();

}  // namespace canonica
