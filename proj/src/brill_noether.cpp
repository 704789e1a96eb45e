#include "canonica/brill_noether.hpp"

#include <algorithm>

#include "canonica/errors.hpp"
#include "canonica/kernels.hpp"

namespace canonica {

namespace {

bool in_delta(const MonomialSheafModel& f, int x) {
  return std::binary_search(f.delta.begin(), f.delta.end(), x);
}

}  // namespace

void validate(const NumericalSemigroup& s, const MonomialSheafModel& f) {
  const int gamma = s.frobenius();
  if (!std::is_sorted(f.delta.begin(), f.delta.end()) ||
      std::adjacent_find(f.delta.begin(), f.delta.end()) != f.delta.end())
    throw Error(ErrorKind::InvalidModel, "Delta must be strictly increasing");
  for (int d : f.delta)
    if (!s.is_gap(d)) throw Error(ErrorKind::InvalidModel, std::to_string(d) + " in Delta is not a gap");
  if (f.a_max < 1 || f.a_max > gamma)
    throw Error(ErrorKind::InvalidModel, "a_max must lie in [1, gamma]");
  if (!s.contains(f.a_max) && !in_delta(f, f.a_max))
    throw Error(ErrorKind::InvalidModel, "a_max is neither in S nor in Delta");
  for (int d : f.delta) {
    for (int x = s.multiplicity(); d + x <= gamma; ++x) {
      if (s.contains(x) && s.is_gap(d + x) && !in_delta(f, d + x))
        throw Error(ErrorKind::InvalidModel, "Delta is not S-closed: " + std::to_string(d) + " + " +
                                                 std::to_string(x) + " is a gap outside Delta");
    }
    bool minimal = true;
    for (int d2 : f.delta)
      if (d2 < d && s.contains(d - d2)) minimal = false;
    if (minimal && d > f.a_max)
      throw Error(ErrorKind::InvalidModel,
                  "minimal element " + std::to_string(d) + " of Delta exceeds a_max");
  }
}

SheafInvariants sheaf_invariants(const NumericalSemigroup& s, const MonomialSheafModel& f) {
  validate(s, f);
  const int gamma = s.frobenius();
  SheafInvariants r;
  r.deg = f.a_max + static_cast<int>(f.delta.size());
  for (int x = 0; x <= f.a_max; ++x)
    if (s.contains(x) || in_delta(f, x)) ++r.h0;
  for (int x = f.a_max + 1; x <= gamma; ++x)
    if (s.is_gap(x) && !in_delta(f, x)) ++r.h1;
  r.cliff = r.deg - 2 * (r.h0 - 1);
  if (r.h0 - r.h1 != r.deg + 1 - s.genus())
    throw Error(ErrorKind::InvariantViolation, "Riemann-Roch fails for a sheaf model");
  return r;
}

int cliff_paper_formula(const NumericalSemigroup& s, const MonomialSheafModel& f) {
  const int gamma = s.frobenius();
  int free_gaps = 0, elements = 0, delta_above = 0;
  for (int x = 1; x <= f.a_max; ++x) {
    if (s.is_gap(x) && !in_delta(f, x)) ++free_gaps;
    if (s.contains(x)) ++elements;
  }
  for (int x = f.a_max + 1; x <= gamma; ++x)
    if (in_delta(f, x)) ++delta_above;
  return free_gaps - elements + delta_above;
}

// ---------------------------------------------------------------------------

namespace {

MonomialSheafModel to_model(const GapPoset& poset, const ModelChoice& c) {
  MonomialSheafModel f;
  f.a_max = c.a_max;
  for (std::size_t i = 0; i < poset.gaps.size(); ++i)
    if ((c.delta >> i) & 1) f.delta.push_back(poset.gaps[i]);
  return f;
}

}  // namespace

BrillNoether brill_noether(const NumericalSemigroup& s, SearchMode mode) {
  if (s.is_trivial()) throw Error(ErrorKind::TrivialSemigroup, "S = N carries no pencil of this kind");
  const GapPoset poset(s);
  ModelSearch found;
  if (mode == SearchMode::Serial) {
    const auto deltas = closed_gap_sets_naive(poset);
    found = sweep_models_serial(s, poset, deltas);
  } else {
    const auto deltas = closed_gap_sets(poset);
    found = sweep_models_parallel(s, poset, deltas);
  }
  if (!found.gonality)
    throw Error(ErrorKind::InvariantViolation, "no model with two sections; (0, alpha) always is one");

  BrillNoether out;
  out.models = found.models;
  out.gonality = {found.gonality->value, to_model(poset, *found.gonality)};
  if (found.clifford) out.clifford = Extremum{found.clifford->value, to_model(poset, *found.clifford)};
  out.bpf_g13 = out.gonality.value == 3 && s.contains(3);
  return out;
}

std::optional<Extremum> clifford_index(const NumericalSemigroup& s) { return brill_noether(s).clifford; }

Extremum gonality(const NumericalSemigroup& s) { return brill_noether(s).gonality; }

void for_each_model(const NumericalSemigroup& s,
                    const std::function<void(const MonomialSheafModel&)>& fn) {
  const GapPoset poset(s);
  for (std::uint64_t mask : closed_gap_sets_naive(poset)) {
    const int floor_a = poset.max_minimal(mask);
    for (int a = std::max(floor_a, 1); a <= s.frobenius(); ++a) {
      const bool in_e = s.contains(a) || ((mask >> poset.gap_index[a]) & 1);
      if (in_e) fn(to_model(poset, {0, a, mask}));
    }
  }
}

// ---------------------------------------------------------------------------

std::vector<int> kunz_family_stated_generators(int alpha) {
  if (alpha < 3) throw Error(ErrorKind::AlphaTooSmall, "the family starts at alpha = 3");
  std::vector<int> gens{alpha};
  for (int x = alpha * (alpha - 2) + 3; x <= alpha * (alpha - 1) - 1; ++x) gens.push_back(x);
  gens.push_back(alpha * (alpha - 1) + 1);
  return gens;
}

namespace {

// [1, gamma] = G_1 u S_1 u G_2 u ... as blocks of gaps and elements.
void check_blocks(const NumericalSemigroup& s, int alpha) {
  const int gamma = s.frobenius();
  std::vector<int> gaps;
  for (int i = 1; i <= alpha - 2; ++i)
    for (int x = (i - 1) * alpha + 1; x <= i * alpha - 1; ++x) gaps.push_back(x);
  const int base = (alpha - 2) * alpha;
  gaps.push_back(base + 1);
  gaps.push_back(base + 2);
  for (int i = alpha; i <= 2 * alpha - 3; ++i) gaps.push_back((i - alpha + 1) * alpha + base + 2);

  std::vector<int> elements;
  for (int i = 1; i <= alpha - 2; ++i) elements.push_back(i * alpha);
  for (int i = alpha - 1; i <= 2 * alpha - 4; ++i)
    for (int x = (i - 1) * alpha + 3; x <= i * alpha + 1; ++x) elements.push_back(x);

  std::vector<int> all = gaps;
  all.insert(all.end(), elements.begin(), elements.end());
  std::sort(all.begin(), all.end());
  std::vector<int> expected_all(gamma);
  for (int x = 1; x <= gamma; ++x) expected_all[x - 1] = x;
  if (gaps != s.gaps() || all != expected_all)
    throw Error(ErrorKind::InvariantViolation,
                "family member for alpha = " + std::to_string(alpha) + " breaks the block structure");
}

}  // namespace

KunzFamilyMember kunz_family(int alpha) {
  const auto stated = kunz_family_stated_generators(alpha);
  KunzFamilyMember out{NumericalSemigroup::from_generators(stated), stated, stated, std::nullopt};
  const int expected_gamma = (2 * alpha - 4) * alpha + 2;

  const bool stated_ok =
      out.semigroup.frobenius() == expected_gamma && is_pseudo_symmetric(out.semigroup);
  if (!stated_ok) {
    if (alpha != 3)
      throw Error(ErrorKind::InvariantViolation,
                  "family member for alpha = " + std::to_string(alpha) + " is not pseudo-symmetric");
    out.generators = {3, 7, 11};
    out.semigroup = NumericalSemigroup::from_generators(out.generators);
    out.note = "stated member <3,7> is symmetric with gamma = 11, not pseudo-symmetric with gamma = 8; "
               "using <3,7,11>";
  }
  if (out.semigroup.frobenius() != expected_gamma || !is_pseudo_symmetric(out.semigroup))
    throw Error(ErrorKind::InvariantViolation, "family member fails gamma = (2 alpha - 4) alpha + 2");
  check_blocks(out.semigroup, alpha);
  return out;
}

}  // namespace canonica
