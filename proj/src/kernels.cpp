#include "canonica/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <exception>
#include <mutex>

#include "canonica/errors.hpp"

namespace canonica {

namespace {

// Marks every value e[i_1] + ... + e[i_rem] + base with i_1 >= first.
void mark_values(std::span<const int> e, int first, int rem, int base,
                 std::vector<unsigned char>& hit) {
  if (rem == 0) {
    hit[base] = 1;
    return;
  }
  for (int i = first; i < static_cast<int>(e.size()); ++i)
    mark_values(e, i, rem - 1, base + e[i], hit);
}

std::size_t table_size(std::span<const int> exps, int n) {
  if (exps.empty() || n < 1) throw Error(ErrorKind::InvalidArgument, "empty exponent set");
  return static_cast<std::size_t>(n) * *std::max_element(exps.begin(), exps.end()) + 1;
}

}  // namespace

std::vector<unsigned char> monomial_value_table_serial(std::span<const int> exps, int n) {
  std::vector<unsigned char> hit(table_size(exps, n), 0);
  mark_values(exps, 0, n, 0, hit);
  return hit;
}

std::vector<unsigned char> monomial_value_table_parallel(std::span<const int> exps, int n) {
  const std::size_t size = table_size(exps, n);
  std::vector<unsigned char> hit(size, 0);
  const int nv = static_cast<int>(exps.size());
#pragma omp parallel
  {
    std::vector<unsigned char> local(size, 0);
    // split on the leading variable
#pragma omp for schedule(dynamic, 1) nowait
    for (int lead = 0; lead < nv; ++lead) mark_values(exps, lead, n - 1, exps[lead], local);
#pragma omp critical
    for (std::size_t v = 0; v < size; ++v) hit[v] |= local[v];
  }
  return hit;
}

// ---------------------------------------------------------------------------

GapPoset::GapPoset(const NumericalSemigroup& s) : gaps(s.gaps()), gamma(s.frobenius()) {
  if (gaps.size() > 64)
    throw Error(ErrorKind::CombinatorialBlowup,
                "genus " + std::to_string(gaps.size()) + " exceeds the 64-gap model search");
  gap_index.assign(std::max(gamma, 0) + 1, -1);
  for (std::size_t i = 0; i < gaps.size(); ++i) gap_index[gaps[i]] = static_cast<int>(i);
  above.assign(gaps.size(), 0);
  below.assign(gaps.size(), 0);
  for (std::size_t i = 0; i < gaps.size(); ++i)
    for (std::size_t j = 0; j < gaps.size(); ++j) {
      const int diff = gaps[j] - gaps[i];
      if (diff > 0 && s.contains(diff)) {
        above[i] |= std::uint64_t{1} << j;
        below[j] |= std::uint64_t{1} << i;
      }
    }
}

bool GapPoset::closed(std::uint64_t delta) const {
  for (std::uint64_t rest = delta; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    if ((above[i] & ~delta) != 0) return false;
  }
  return true;
}

int GapPoset::max_minimal(std::uint64_t delta) const {
  int best = 0;
  for (std::uint64_t rest = delta; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    if ((below[i] & delta) == 0) best = std::max(best, gaps[i]);
  }
  return best;
}

std::vector<std::uint64_t> closed_gap_sets_naive(const GapPoset& poset) {
  const std::size_t g = poset.gaps.size();
  if (g > 24)
    throw Error(ErrorKind::CombinatorialBlowup, "naive subset filter limited to genus 24");
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask)
    if (poset.closed(mask)) out.push_back(mask);
  return out;
}

namespace {

void collect_up_sets(const GapPoset& poset, int i, std::uint64_t current,
                     std::size_t cap, std::vector<std::uint64_t>& out) {
  if (i < 0) {
    if (out.size() >= cap)
      throw Error(ErrorKind::CombinatorialBlowup,
                  "more than " + std::to_string(cap) + " S-closed gap sets");
    out.push_back(current);
    return;
  }
  collect_up_sets(poset, i - 1, current, cap, out);
  if ((poset.above[i] & ~current) == 0)
    collect_up_sets(poset, i - 1, current | (std::uint64_t{1} << i), cap, out);
}

}  // namespace

std::vector<std::uint64_t> closed_gap_sets(const GapPoset& poset, std::size_t cap) {
  std::vector<std::uint64_t> out;
  collect_up_sets(poset, static_cast<int>(poset.gaps.size()) - 1, 0, cap, out);
  return out;
}

bool delta_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int x = std::countr_zero(a ^ b);
  if ((a >> x) & 1) return ((b >> x) >> 1) != 0;
  return ((a >> x) >> 1) == 0;
}

bool better(const ModelChoice& x, const ModelChoice& y) {
  if (x.value != y.value) return x.value < y.value;
  if (x.a_max != y.a_max) return x.a_max < y.a_max;
  return delta_lex_less(x.delta, y.delta);
}

namespace {

void offer(std::optional<ModelChoice>& slot, const ModelChoice& c) {
  if (!slot || better(c, *slot)) slot = c;
}

void sweep_one(const NumericalSemigroup& s, const GapPoset& poset, std::uint64_t delta,
               ModelSearch& acc) {
  const int gamma = poset.gamma;
  const int nd = std::popcount(delta);
  const int free_gaps = static_cast<int>(poset.gaps.size()) - nd;
  const int floor_a = poset.max_minimal(delta);
  int h0 = 1;            // #((S u Delta) n [0, a])
  int free_below = 0;    // #((G \ Delta) n [1, a])
  for (int a = 1; a <= gamma; ++a) {
    bool in_e = s.contains(a);
    if (!in_e) in_e = (delta >> poset.gap_index[a]) & 1;
    if (in_e) {
      ++h0;
    } else {
      ++free_below;
      continue;
    }
    if (a < floor_a) continue;
    ++acc.models;
    const int h1 = free_gaps - free_below;
    const int deg = a + nd;
    if (h0 >= 2) offer(acc.gonality, {deg, a, delta});
    if (h0 >= 2 && h1 >= 2) offer(acc.clifford, {deg - 2 * (h0 - 1), a, delta});
  }
}

void merge(ModelSearch& into, const ModelSearch& from) {
  into.models += from.models;
  if (from.gonality) offer(into.gonality, *from.gonality);
  if (from.clifford) offer(into.clifford, *from.clifford);
}

}  // namespace

ModelSearch sweep_models_serial(const NumericalSemigroup& s, const GapPoset& poset,
                                std::span<const std::uint64_t> deltas) {
  ModelSearch acc;
  for (std::uint64_t d : deltas) sweep_one(s, poset, d, acc);
  return acc;
}

ModelSearch sweep_models_parallel(const NumericalSemigroup& s, const GapPoset& poset,
                                  std::span<const std::uint64_t> deltas) {
  ModelSearch result;
  const long n = static_cast<long>(deltas.size());
#pragma omp parallel
  {
    ModelSearch local;
#pragma omp for schedule(static) nowait
    for (long i = 0; i < n; ++i) sweep_one(s, poset, deltas[i], local);
#pragma omp critical
    merge(result, local);
  }
  return result;
}

// ---------------------------------------------------------------------------

int default_threads() { return omp_get_max_threads(); }

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
  if (threads <= 0) threads = default_threads();
  std::exception_ptr first;
  std::mutex mu;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace canonica
