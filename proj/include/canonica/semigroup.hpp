#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace canonica {

/// A numerical semigroup S, stored by its gap set and a dense membership
/// table on [0, gamma + alpha]. Integers above the table are members,
/// negative integers are not. Immutable after construction.
///
/// The empty gap set encodes S = N with frobenius() == -1; most of the
/// library rejects it with ErrorKind::TrivialSemigroup.
class NumericalSemigroup {
 public:
  /// Additive closure of `gens`. Throws EmptyInput, InvalidArgument for
  /// non-positive entries, NonCoprimeGenerators when gcd != 1.
  static NumericalSemigroup from_generators(std::span<const int> gens);

  /// Semigroup with exactly the given gaps. Throws NotAGapSet naming a pair
  /// of elements whose sum is a gap.
  static NumericalSemigroup from_gaps(std::span<const int> gaps);

  /// The semigroup N (no gaps).
  NumericalSemigroup();

  const std::vector<int>& gaps() const noexcept { return gaps_; }
  int frobenius() const noexcept { return frobenius_; }
  int genus() const noexcept { return static_cast<int>(gaps_.size()); }
  int multiplicity() const noexcept { return alpha_; }
  int conductor() const noexcept { return frobenius_ + 1; }
  int tau() const noexcept { return tau_; }
  int m_invariant() const noexcept { return m_; }
  bool is_trivial() const noexcept { return gaps_.empty(); }

  bool contains(int x) const noexcept {
    if (x < 0) return false;
    if (static_cast<std::size_t>(x) >= member_.size()) return true;
    return member_[x] != 0;
  }
  bool is_gap(int x) const noexcept { return x > 0 && !contains(x); }

  /// Elements of S in [0, bound], increasing.
  std::vector<int> elements_up_to(int bound) const;

  /// Minimal generators: nonzero elements that are not a sum of two nonzero
  /// elements. Increasing.
  std::vector<int> minimal_generators() const;

  bool operator==(const NumericalSemigroup& other) const noexcept {
    return gaps_ == other.gaps_;
  }

 private:
  friend std::vector<NumericalSemigroup> enumerate_genus(int g, int bound);
  explicit NumericalSemigroup(std::vector<int> gaps);

  std::vector<int> gaps_;
  std::vector<unsigned char> member_;
  int frobenius_ = -1;
  int alpha_ = 1;
  int tau_ = 0;
  int m_ = 0;
};

// ---------------------------------------------------------------------------
// Text encoding: `gens:3,7,11` or `gaps:1,2,4,5,8` (no spaces).

enum class Encoding { Generators, Gaps };

NumericalSemigroup parse_semigroup(std::string_view text);
std::string render(const NumericalSemigroup& s,
                   Encoding encoding = Encoding::Generators);

// ---------------------------------------------------------------------------
// Enumeration.

/// Largest genus accepted by enumerate_genus: CANONICA_MAX_GENUS if set,
/// otherwise 12.
int max_genus();

/// Every numerical semigroup of genus g, once each, in lexicographic order of
/// gap sets. Built by descending the semigroup tree (remove a minimal
/// generator larger than the Frobenius number). Throws BoundExceeded.
std::vector<NumericalSemigroup> enumerate_genus(int g);
std::vector<NumericalSemigroup> enumerate_genus(int g, int bound);

// ---------------------------------------------------------------------------
// Set operations on value sets.

/// K = {a in Z : gamma - a not in S}. Members above gamma are implicit.
struct KappaSet {
  std::vector<int> below;  // K intersected with [0, gamma], increasing
  int tail_start = 0;      // gamma + 1; every integer >= tail_start is in K

  bool contains(int a) const;
};

KappaSet kappa_set(const NumericalSemigroup& s);

/// Additive closure of A (which must contain 0 and lie in [0, bound]),
/// intersected with [0, bound]. Increasing.
std::vector<int> semigroup_closure(std::span<const int> a, int bound);

/// I - J = {a in [lo, hi] : a + j in I for every j in J}.
std::vector<int> set_difference(const std::function<bool(int)>& in_i,
                                std::span<const int> j, int lo, int hi);

/// gamma - l in S for every gap l. Throws TrivialSemigroup.
bool is_symmetric(const NumericalSemigroup& s);

/// gamma even, gamma/2 a gap, and gamma - l in S for every other gap l.
/// Throws TrivialSemigroup.
bool is_pseudo_symmetric(const NumericalSemigroup& s);

/// S = {0, gamma + 1, ->}.
bool is_ordinary(const NumericalSemigroup& s);

}  // namespace canonica
