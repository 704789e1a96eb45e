#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "canonica/canonical_model.hpp"
#include "canonica/semigroup.hpp"

namespace canonica {

// ---------------------------------------------------------------------------
// Partitions of s into two gaps.

struct GapPartition {
  int s = 0;
  std::vector<std::pair<int, int>> pairs;  // a <= b, a + b = s, ascending in a

  bool empty() const noexcept { return pairs.empty(); }
  /// nu_s: number of non-minimal pairs
  int nu() const noexcept { return pairs.empty() ? 0 : static_cast<int>(pairs.size()) - 1; }
  const std::pair<int, int>& minimal() const { return pairs.front(); }
};

/// Throws InvalidArgument unless 2 <= s <= 2 gamma.
GapPartition partitions(const NumericalSemigroup& s, int target);

/// (a, b) are gaps and no gap x < min(a, b) has a + b - x a gap.
bool is_minimal_pair(const NumericalSemigroup& s, int a, int b);

// ---------------------------------------------------------------------------
// Exceptional triples.

using Triple = std::array<int, 3>;

/// Sorted gap triples avoiding 1 and gamma whose three pairs are all
/// minimal. Throws GenusTooSmall (g < 3).
std::vector<Triple> exceptional_triples(const NumericalSemigroup& s);

enum class TripleCase { I, II, III, IV, V };
std::string_view to_string(TripleCase c);

/// Every case whose pattern and side conditions hold. Empty means the triple
/// is unclassifiable; more than one match is ambiguous.
std::vector<TripleCase> classify_triple(const NumericalSemigroup& s, const Triple& t);

struct TripleReduction {
  enum class Kind { NormalOne, NormalGamma, Irreducible };
  Kind kind = Kind::Irreducible;
  Triple result{};
  std::vector<Triple> trace;  // every intermediate triple, starting with the input
};

/// Rewrites non-minimal pairs to the minimal pair of their sum until the
/// triple is (1, a_s, b_s) or (a_s, b_s, gamma) with a minimal remaining pair,
/// or no pair can be rewritten.
TripleReduction reduce_triple(const NumericalSemigroup& s, Triple t);

// ---------------------------------------------------------------------------
// Binomial generators.

enum class GeneratorOrigin {
  QuadricS,
  CubicKunzA,
  CubicKunzB,
  CubicTrigBase,
  CubicTrigK,
  OracleMinimal,
};
std::string_view to_string(GeneratorOrigin origin);

struct IdealGenerator {
  GradedMonomial plus;
  GradedMonomial minus;
  GeneratorOrigin origin = GeneratorOrigin::OracleMinimal;

  int degree() const noexcept { return plus.degree(); }
  bool vanishes(const CanonicalChart& chart) const {
    return plus.value(chart) == minus.value(chart);
  }
  std::string to_string() const { return plus.to_string() + " - " + minus.to_string(); }
};

enum class PaperVariant {
  Corrected,            // s in [2, 2 gamma]; cubic sum 3 gamma/2 - 1
  LiteralQuadricRange,  // s in [2, gamma]
  IntroCubicConstant,   // cubic sum gamma/2 - 1
};

/// The quadric and cubic lists for nearly Gorenstein, non-Gorenstein S.
/// Cubics whose partition (or variable) does not exist are skipped. In the
/// Corrected variant every generator is checked to vanish (InvariantViolation
/// otherwise). Throws GenusTooSmall, Hyperelliptic, Gorenstein,
/// NotNearlyGorenstein.
std::vector<IdealGenerator> paper_generators(const NumericalSemigroup& s,
                                             PaperVariant variant = PaperVariant::Corrected);

/// dim of the span of {m f} in degree n, by union-find on the fibers.
/// Generators above degree n contribute nothing. Throws DegreeTooSmall for n < 2.
std::int64_t graded_span_dim(const std::vector<IdealGenerator>& gens,
                             const NumericalSemigroup& s, int n);

/// Same dimension by exact rational elimination of the coefficient rows.
std::int64_t graded_span_dim_exact(const std::vector<IdealGenerator>& gens,
                                   const NumericalSemigroup& s, int n);

/// For each generator (in list order, lower degrees first): true when it is
/// already in the ideal spanned by the lower-degree ones and the earlier ones
/// of its own degree.
std::vector<bool> redundant_generators(const std::vector<IdealGenerator>& gens,
                                       const NumericalSemigroup& s);

struct MinimalGenerators {
  std::vector<IdealGenerator> gens;  // by degree, then fiber value
  std::vector<std::int64_t> betti;   // betti[n] = beta_{0,n}, n = 0..N
};

/// Degree-by-degree minimal binomial generators up to degree N.
/// Throws GenusTooSmall, Hyperelliptic, CombinatorialBlowup.
MinimalGenerators minimal_generators(const NumericalSemigroup& s, int max_degree);

/// dim I_3 - dim of the degree-3 span of the quadrics. Throws
/// NotLinearlyNormal for S neither Gorenstein nor nearly Gorenstein.
std::int64_t betti_13(const NumericalSemigroup& s);

/// Generated by quadrics: beta_{0,3} = beta_{0,4} = 0 (true for hyperelliptic
/// S without computing). Throws NotLinearlyNormal.
bool is_cut_by_quadrics(const NumericalSemigroup& s);

}  // namespace canonica
