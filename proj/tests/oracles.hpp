#pragma once

// Deliberately naive reference implementations. Nothing here calls the
// library beyond reading gaps()/contains() off a semigroup.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "canonica/semigroup.hpp"

namespace oracle {

// gaps of <gens> by sieving [0, limit]
inline std::vector<int> gaps_of(const std::vector<int>& gens, int limit = 400) {
  std::vector<bool> in(limit + 1, false);
  in[0] = true;
  for (int x = 1; x <= limit; ++x)
    for (int a : gens)
      if (x >= a && in[x - a]) in[x] = true;
  std::vector<int> gaps;
  for (int x = 1; x <= limit; ++x)
    if (!in[x]) gaps.push_back(x);
  return gaps;
}

inline bool is_gap_set(const std::vector<int>& gaps) {
  std::set<int> g(gaps.begin(), gaps.end());
  const int top = gaps.empty() ? 0 : gaps.back();
  for (int a = 1; a <= top; ++a)
    for (int b = a; a + b <= top; ++b)
      if (!g.count(a) && !g.count(b) && g.count(a + b)) return false;
  return true;
}

// every gap set of size g inside [1, 2g - 1]
inline std::vector<std::vector<int>> gap_sets_of_genus(int g) {
  std::vector<std::vector<int>> out;
  if (g == 0) return {{}};
  const int n = 2 * g - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != g) continue;
    std::vector<int> gaps;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) gaps.push_back(i + 1);
    if (is_gap_set(gaps)) out.push_back(gaps);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int frobenius(const canonica::NumericalSemigroup& s) {
  return s.gaps().empty() ? -1 : s.gaps().back();
}

inline std::set<int> kappa_below(const canonica::NumericalSemigroup& s) {
  const int gamma = frobenius(s);
  std::set<int> k;
  for (int a = 0; a <= gamma; ++a)
    if (!s.contains(gamma - a)) k.insert(a);
  return k;
}

inline int eta(const canonica::NumericalSemigroup& s) {
  int n = 0;
  for (int a : kappa_below(s)) n += !s.contains(a);
  return n;
}

inline int mu(const canonica::NumericalSemigroup& s) {
  const int gamma = frobenius(s);
  auto k = kappa_below(s);
  std::set<int> closed = k;
  for (bool grew = true; grew;) {
    grew = false;
    for (int a : std::vector<int>(closed.begin(), closed.end()))
      for (int b : std::vector<int>(closed.begin(), closed.end()))
        if (a + b <= gamma && closed.insert(a + b).second) grew = true;
  }
  return static_cast<int>(closed.size() - k.size());
}

inline std::vector<int> exponents(const canonica::NumericalSemigroup& s) {
  std::vector<int> e;
  for (int l : s.gaps()) e.push_back(frobenius(s) - l);
  return e;
}

inline std::set<int> sumset(const canonica::NumericalSemigroup& s, int n) {
  std::set<int> cur{0};
  const auto e = exponents(s);
  for (int i = 0; i < n; ++i) {
    std::set<int> next;
    for (int a : cur)
      for (int b : e) next.insert(a + b);
    cur = std::move(next);
  }
  return cur;
}

// every multiset of size n from [0, nvars), non-decreasing
inline void for_each_multiset(int nvars, int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == n) {
      fn(cur);
      return;
    }
    for (int i = lo; i < nvars; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
}

// #monomials - #values
inline std::int64_t dim_ideal(const canonica::NumericalSemigroup& s, int n) {
  const auto e = exponents(s);
  std::set<int> values;
  std::int64_t count = 0;
  for_each_multiset(static_cast<int>(e.size()), n, [&](const std::vector<int>& m) {
    int v = 0;
    for (int i : m) v += e[i];
    values.insert(v);
    ++count;
  });
  return count - static_cast<std::int64_t>(values.size());
}

// A binomial given by two label multisets.
struct Binomial {
  std::vector<int> plus, minus;
};

// rank mod p of {m * f : deg m = n - deg f} in degree n
inline std::int64_t span_dim_mod_p(const canonica::NumericalSemigroup& s, const std::vector<Binomial>& gens, int n) {
  constexpr std::int64_t p = 1'000'003;
  const auto& gaps = s.gaps();
  const int nv = static_cast<int>(gaps.size());
  std::map<int, int> var;
  for (int i = 0; i < nv; ++i) var[gaps[i]] = i;
  std::map<std::vector<int>, int> index;
  for_each_multiset(nv, n, [&](const std::vector<int>& m) { index.emplace(m, static_cast<int>(index.size())); });

  std::vector<std::map<int, std::int64_t>> rows;
  for (const auto& f : gens) {
    const int d = static_cast<int>(f.plus.size());
    if (d > n) continue;
    for_each_multiset(nv, n - d, [&](const std::vector<int>& m) {
      auto mono = [&](const std::vector<int>& labels) {
        std::vector<int> v = m;
        for (int l : labels) v.push_back(var.at(l));
        std::sort(v.begin(), v.end());
        return index.at(v);
      };
      std::map<int, std::int64_t> row;
      row[mono(f.plus)] = (row[mono(f.plus)] + 1) % p;
      const int b = mono(f.minus);
      row[b] = (row[b] + p - 1) % p;
      std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
      if (!row.empty()) rows.push_back(row);
    });
  }
  auto inv = [&](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    for (a %= p; e; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return r;
  };
  // sparse Gaussian elimination keyed by pivot column
  std::map<int, std::map<int, std::int64_t>> pivots;
  std::int64_t rank = 0;
  for (auto row : rows) {
    while (!row.empty()) {
      const int col = row.begin()->first;
      auto it = pivots.find(col);
      if (it == pivots.end()) {
        const auto c = inv(row.begin()->second);
        for (auto& [k, v] : row) v = v * c % p;
        pivots.emplace(col, row);
        ++rank;
        break;
      }
      const auto c = row.begin()->second;
      for (const auto& [k, v] : it->second) {
        auto& x = row[k];
        x = ((x - c * v) % p + p) % p;
      }
      std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    }
  }
  return rank;
}

// Sheaf models by brute force: Delta any S-closed subset of gaps (checked on
// pairs inside [0, gamma]), a in [1, gamma].
struct Sheaf {
  std::vector<int> delta;
  int a = 0;
  int deg = 0, h0 = 0, h1 = 0;
};

inline void for_each_sheaf(const canonica::NumericalSemigroup& s, const std::function<void(const Sheaf&)>& fn) {
  const auto& gaps = s.gaps();
  const int g = static_cast<int>(gaps.size());
  const int gamma = frobenius(s);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
    std::set<int> delta;
    for (int i = 0; i < g; ++i)
      if (mask >> i & 1) delta.insert(gaps[i]);
    bool closed = true;
    for (int d : delta)
      for (int x = 1; d + x <= gamma && closed; ++x)
        if (s.contains(x) && !s.contains(d + x) && !delta.count(d + x)) closed = false;
    if (!closed) continue;
    // a valid model needs a in S u Delta and every minimal element of Delta <= a
    int max_min = 0;
    for (int d : delta) {
      bool minimal = true;
      for (int e : delta)
        if (e < d && s.contains(d - e)) minimal = false;
      if (minimal) max_min = std::max(max_min, d);
    }
    for (int a = 1; a <= gamma; ++a) {
      if (!s.contains(a) && !delta.count(a)) continue;
      if (a < max_min) continue;
      Sheaf f;
      f.delta.assign(delta.begin(), delta.end());
      f.a = a;
      f.deg = a + static_cast<int>(delta.size());
      for (int x = 0; x <= a; ++x) f.h0 += s.contains(x) || delta.count(x);
      for (int l : gaps) f.h1 += l > a && !delta.count(l);
      fn(f);
    }
  }
}

inline int gonality(const canonica::NumericalSemigroup& s) {
  int best = 1 << 30;
  for_each_sheaf(s, [&](const Sheaf& f) {
    if (f.h0 >= 2) best = std::min(best, f.deg);
  });
  return best;
}

// -1 when no sheaf contributes
inline int clifford(const canonica::NumericalSemigroup& s) {
  int best = 1 << 30;
  for_each_sheaf(s, [&](const Sheaf& f) {
    if (f.h0 >= 2 && f.h1 >= 2) best = std::min(best, f.deg - 2 * (f.h0 - 1));
  });
  return best == (1 << 30) ? -1 : best;
}

}  // namespace oracle
