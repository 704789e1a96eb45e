#include "canonica/ideal_synthesis.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>

#include "canonica/classification.hpp"
#include "canonica/errors.hpp"
#include "canonica/monomials.hpp"

namespace canonica {

using boost::multiprecision::cpp_rational;

GapPartition partitions(const NumericalSemigroup& s, int target) {
  const int gamma = s.frobenius();
  if (s.is_trivial() || target < 2 || target > 2 * gamma)
    throw Error(ErrorKind::InvalidArgument,
                "partition target " + std::to_string(target) + " outside [2, 2 gamma]");
  GapPartition p;
  p.s = target;
  for (int a : s.gaps()) {
    const int b = target - a;
    if (b < a) break;
    if (s.is_gap(b)) p.pairs.emplace_back(a, b);
  }
  return p;
}

bool is_minimal_pair(const NumericalSemigroup& s, int a, int b) {
  if (!s.is_gap(a) || !s.is_gap(b)) return false;
  const int lo = std::min(a, b);
  for (int x : s.gaps()) {
    if (x >= lo) break;
    if (s.is_gap(a + b - x)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::vector<Triple> exceptional_triples(const NumericalSemigroup& s) {
  if (s.is_trivial() || s.genus() < 3)
    throw Error(ErrorKind::GenusTooSmall, "exceptional triples need genus >= 3");
  const int gamma = s.frobenius();
  std::vector<int> inner;
  for (int l : s.gaps())
    if (l != 1 && l != gamma) inner.push_back(l);

  std::vector<Triple> out;
  const std::size_t n = inner.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (!is_minimal_pair(s, inner[i], inner[j])) continue;
      for (std::size_t k = j; k < n; ++k)
        if (is_minimal_pair(s, inner[i], inner[k]) && is_minimal_pair(s, inner[j], inner[k]))
          out.push_back({inner[i], inner[j], inner[k]});
    }
  return out;
}

std::string_view to_string(TripleCase c) {
  switch (c) {
    case TripleCase::I: return "I";
    case TripleCase::II: return "II";
    case TripleCase::III: return "III";
    case TripleCase::IV: return "IV";
    case TripleCase::V: return "V";
  }
  return "?";
}

namespace {

bool interval_in_s(const NumericalSemigroup& s, int lo, int hi) {
  for (int x = lo; x <= hi; ++x)
    if (!s.contains(x)) return false;
  return true;
}

Triple sorted(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

std::vector<TripleCase> classify_triple(const NumericalSemigroup& s, const Triple& raw) {
  const Triple t = sorted(raw);
  const int alpha = s.multiplicity();
  const int gamma = s.frobenius();
  const int tau = s.tau();
  const int m = s.m_invariant();
  const bool pseudo = is_pseudo_symmetric(s);
  std::vector<TripleCase> hits;

  // (a1, alpha - 1, a3)
  {
    const int a1 = t[0], a3 = t[2];
    if (t[1] == alpha - 1 && a1 >= 2 && interval_in_s(s, alpha + 1, alpha + a1 - 2) &&
        interval_in_s(s, a3 + 1, a3 + alpha - 2) && interval_in_s(s, a3 + 1, a3 + a1 - 1))
      hits.push_back(TripleCase::I);
  }

  // (2, k alpha - 1, gamma - (m+1) alpha + 1), k in [2, m+1]
  if (m >= 1) {
    const int c = gamma - (m + 1) * alpha + 1;
    if (interval_in_s(s, c + 1, c + alpha - 2)) {
      for (int k = 2; k <= m + 1; ++k) {
        if (t == sorted({2, k * alpha - 1, c})) {
          hits.push_back(TripleCase::II);
          break;
        }
      }
    }
  }

  // (a1, a2, gamma - a2), a2 the smallest gap with gamma - a2 a gap
  {
    int smallest = -1;
    for (int x : s.gaps())
      if (s.is_gap(gamma - x)) {
        smallest = x;
        break;
      }
    const int a1 = t[0], a2 = t[1], a3 = t[2];
    if (smallest > 0 && a1 < alpha && a2 > tau * alpha && a2 == smallest && a3 == gamma - a2 &&
        interval_in_s(s, a2 + 1, a2 + a1 - 1) && interval_in_s(s, a3 + 1, a3 + a1 - 1))
      hits.push_back(TripleCase::III);
  }

  if (pseudo) {
    const int h = gamma / 2;
    // (k alpha + r, gamma/2, gamma/2), gamma/2 = m' alpha + r, 1 <= k <= m' - 1
    const int mm = h / alpha, r = h % alpha;
    if (t[1] == h && t[2] == h && r > 0) {
      for (int k = 1; k <= mm - 1; ++k)
        if (t[0] == k * alpha + r) {
          hits.push_back(TripleCase::IV);
          break;
        }
    }
    if (t[0] == h && t[1] == h && t[2] == h) hits.push_back(TripleCase::V);
  }
  return hits;
}

TripleReduction reduce_triple(const NumericalSemigroup& s, Triple t) {
  const int gamma = s.frobenius();
  TripleReduction out;
  t = sorted(t);
  out.trace.push_back(t);
  while (true) {
    if (t[0] == 1 && is_minimal_pair(s, t[1], t[2])) {
      out.kind = TripleReduction::Kind::NormalOne;
      break;
    }
    if (t[2] == gamma && is_minimal_pair(s, t[0], t[1])) {
      out.kind = TripleReduction::Kind::NormalGamma;
      break;
    }
    static constexpr int kPairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    bool rewritten = false;
    for (const auto& p : kPairs) {
      const int a = t[p[0]], b = t[p[1]];
      if (is_minimal_pair(s, a, b)) continue;
      const auto minimal = partitions(s, a + b).minimal();
      t = sorted({minimal.first, minimal.second, t[p[2]]});
      out.trace.push_back(t);
      rewritten = true;
      break;
    }
    if (!rewritten) {
      out.kind = TripleReduction::Kind::Irreducible;
      break;
    }
  }
  out.result = t;
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(GeneratorOrigin origin) {
  switch (origin) {
    case GeneratorOrigin::QuadricS: return "QUADRIC_S";
    case GeneratorOrigin::CubicKunzA: return "CUBIC_KUNZ_A";
    case GeneratorOrigin::CubicKunzB: return "CUBIC_KUNZ_B";
    case GeneratorOrigin::CubicTrigBase: return "CUBIC_TRIG_BASE";
    case GeneratorOrigin::CubicTrigK: return "CUBIC_TRIG_K";
    case GeneratorOrigin::OracleMinimal: return "ORACLE_MINIMAL";
  }
  return "?";
}

namespace {

GradedMonomial mono(std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  return GradedMonomial{std::move(labels)};
}

std::optional<std::pair<int, int>> minimal_partition(const NumericalSemigroup& s, int target) {
  if (target < 2 || target > 2 * s.frobenius()) return std::nullopt;
  const auto p = partitions(s, target);
  if (p.empty()) return std::nullopt;
  return p.minimal();
}

void require_linearly_normal(const CurveClass& c) {
  if (!c.gorenstein && !c.nearly_gorenstein)
    throw Error(ErrorKind::NotLinearlyNormal,
                "S is neither symmetric nor nearly Gorenstein (mu = " + std::to_string(c.mu) + ")");
}

void require_canonical(const NumericalSemigroup& s) {
  if (s.is_trivial()) throw Error(ErrorKind::TrivialSemigroup, "no gaps");
  if (s.genus() < 3)
    throw Error(ErrorKind::GenusTooSmall, "genus " + std::to_string(s.genus()) + " is below 3");
  if (s.contains(2)) throw Error(ErrorKind::Hyperelliptic, "2 is in S");
}

}  // namespace

std::vector<IdealGenerator> paper_generators(const NumericalSemigroup& s, PaperVariant variant) {
  require_canonical(s);
  const CurveClass c = classify(s);
  if (c.gorenstein)
    throw Error(ErrorKind::Gorenstein, "S is symmetric; the lists cover non-Gorenstein curves only");
  if (!c.nearly_gorenstein)
    throw Error(ErrorKind::NotNearlyGorenstein, "mu = " + std::to_string(c.mu));

  const int gamma = s.frobenius();
  std::vector<IdealGenerator> out;

  const int s_max = variant == PaperVariant::LiteralQuadricRange ? gamma : 2 * gamma;
  for (int target = 2; target <= s_max; ++target) {
    const auto p = partitions(s, target);
    for (int i = 1; i <= p.nu(); ++i) {
      const auto [a0, b0] = p.pairs[0];
      const auto [ai, bi] = p.pairs[i];
      out.push_back({mono({a0, b0}), mono({ai, bi}), GeneratorOrigin::QuadricS});
    }
  }

  if (c.kunz) {
    const int h = gamma / 2;
    const int cubic_sum = variant == PaperVariant::IntroCubicConstant ? h - 1 : 3 * h - 1;
    if (auto ab = minimal_partition(s, cubic_sum))
      out.push_back({mono({h, h, h}), mono({1, ab->first, ab->second}), GeneratorOrigin::CubicKunzA});
    if (auto ab = minimal_partition(s, h))
      out.push_back({mono({h, h, h}), mono({ab->first, ab->second, gamma}), GeneratorOrigin::CubicKunzB});

    if (s.contains(3)) {
      out.push_back({mono({2, h, h}), mono({1, 1, gamma}), GeneratorOrigin::CubicTrigBase});
      const int mm = h / 3, r = h % 3;
      if (r > 0) {
        for (int k = 1; k <= mm - 1; ++k) {
          const int x = 3 * k + r;
          if (!s.is_gap(x)) continue;
          if (auto cd = minimal_partition(s, x + gamma - 1))
            out.push_back({mono({x, h, h}), mono({1, cd->first, cd->second}), GeneratorOrigin::CubicTrigK});
          if (auto cd = minimal_partition(s, x))
            out.push_back({mono({x, h, h}), mono({cd->first, cd->second, gamma}), GeneratorOrigin::CubicTrigK});
        }
      }
    }
  }

  if (variant == PaperVariant::Corrected) {
    const CanonicalChart chart(s);
    for (const auto& f : out)
      if (!f.vanishes(chart))
        throw Error(ErrorKind::InvariantViolation, "generator " + f.to_string() + " does not vanish");
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Degree-n monomial indices of m * plus and m * minus for every multiplier m.
template <typename Fn>
void for_each_multiple(const IdealGenerator& f, const CanonicalChart& chart,
                       const MonomialSpace& space, Fn&& fn) {
  const int d = f.degree();
  const int n = space.degree();
  std::vector<int> p, q;
  for (int l : f.plus.labels) p.push_back(chart.label_index(l));
  for (int l : f.minus.labels) q.push_back(chart.label_index(l));
  if (d == n) {
    fn(space.index_of(p), space.index_of(q));
    return;
  }
  const MonomialSpace mult(chart.nvars(), n - d);
  std::vector<int> buf(n);
  for (std::size_t i = 0; i < mult.size(); ++i) {
    const auto m = mult.indices(i);
    std::copy(m.begin(), m.end(), buf.begin());
    std::copy(p.begin(), p.end(), buf.begin() + (n - d));
    const auto ip = space.index_of(buf);
    std::copy(q.begin(), q.end(), buf.begin() + (n - d));
    const auto iq = space.index_of(buf);
    fn(ip, iq);
  }
}

void require_degree(int n) {
  if (n < 2) throw Error(ErrorKind::DegreeTooSmall, "degree " + std::to_string(n) + " has no binomials");
}

// generators above degree n have no degree-n multiples
std::vector<IdealGenerator> up_to_degree(const std::vector<IdealGenerator>& gens, int n) {
  std::vector<IdealGenerator> out;
  for (const auto& f : gens)
    if (f.degree() <= n) out.push_back(f);
  return out;
}

std::vector<int> monomial_values(const MonomialSpace& space, const CanonicalChart& chart) {
  const auto e = chart.exponents();
  std::vector<int> values(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    int v = 0;
    for (int idx : space.indices(i)) v += e[idx];
    values[i] = v;
  }
  return values;
}

}  // namespace

std::int64_t graded_span_dim(const std::vector<IdealGenerator>& all,
                             const NumericalSemigroup& s, int n) {
  require_degree(n);
  const auto gens = up_to_degree(all, n);
  if (gens.empty()) return 0;
  check_monomial_budget(s, n);
  const CanonicalChart chart(s);
  const MonomialSpace space(chart.nvars(), n);
  UnionFind uf(space.size());
  std::int64_t dim = 0;
  for (const auto& f : gens)
    for_each_multiple(f, chart, space, [&](std::size_t a, std::size_t b) {
      if (uf.unite(a, b)) ++dim;
    });
  return dim;
}

std::int64_t graded_span_dim_exact(const std::vector<IdealGenerator>& all,
                                   const NumericalSemigroup& s, int n) {
  require_degree(n);
  const auto gens = up_to_degree(all, n);
  if (gens.empty()) return 0;
  check_monomial_budget(s, n);
  const CanonicalChart chart(s);
  const MonomialSpace space(chart.nvars(), n);
  const auto values = monomial_values(space, chart);

  // Rows are sparse (monomial index -> coefficient); binomial rows live
  // inside one fiber, so each fiber is eliminated on its own.
  using Row = std::map<std::size_t, cpp_rational>;
  std::map<int, std::vector<Row>> rows_by_fiber;
  for (const auto& f : gens)
    for_each_multiple(f, chart, space, [&](std::size_t a, std::size_t b) {
      Row row;
      row[a] += 1;
      row[b] -= 1;
      for (auto it = row.begin(); it != row.end();)
        it = it->second == 0 ? row.erase(it) : std::next(it);
      if (!row.empty()) rows_by_fiber[values[row.begin()->first]].push_back(std::move(row));
    });

  std::int64_t rank = 0;
  for (auto& [value, rows] : rows_by_fiber) {
    std::map<std::size_t, Row> basis;  // pivot column -> row with leading 1
    for (Row row : rows) {
      while (!row.empty()) {
        const auto [col, coef] = *row.begin();
        auto it = basis.find(col);
        if (it == basis.end()) {
          const cpp_rational lead = coef;
          for (auto& [k, v] : row) v /= lead;
          basis.emplace(col, std::move(row));
          ++rank;
          break;
        }
        const cpp_rational factor = coef;
        for (const auto& [k, v] : it->second) row[k] -= factor * v;
        for (auto jt = row.begin(); jt != row.end();)
          jt = jt->second == 0 ? row.erase(jt) : std::next(jt);
      }
    }
  }
  return rank;
}

std::vector<bool> redundant_generators(const std::vector<IdealGenerator>& gens,
                                       const NumericalSemigroup& s) {
  std::vector<bool> redundant(gens.size(), false);
  if (gens.empty()) return redundant;
  int top = 0;
  for (const auto& f : gens) top = std::max(top, f.degree());
  const CanonicalChart chart(s);
  for (int n = 1; n <= top; ++n) {
    bool any = false;
    for (const auto& f : gens) any = any || f.degree() == n;
    if (!any) continue;
    check_monomial_budget(s, n);
    const MonomialSpace space(chart.nvars(), n);
    UnionFind uf(space.size());
    for (const auto& f : gens)
      if (f.degree() < n) for_each_multiple(f, chart, space, [&](std::size_t a, std::size_t b) { uf.unite(a, b); });
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].degree() != n) continue;
      for_each_multiple(gens[i], chart, space,
                        [&](std::size_t a, std::size_t b) { redundant[i] = !uf.unite(a, b); });
    }
  }
  return redundant;
}

MinimalGenerators minimal_generators(const NumericalSemigroup& s, int max_degree) {
  require_canonical(s);
  if (max_degree < 2) throw Error(ErrorKind::InvalidArgument, "degree must be >= 2");
  for (int n = 2; n <= max_degree; ++n) check_monomial_budget(s, n);

  const CanonicalChart chart(s);
  MinimalGenerators out;
  out.betti.assign(max_degree + 1, 0);
  for (int n = 2; n <= max_degree; ++n) {
    const MonomialSpace space(chart.nvars(), n);
    const auto values = monomial_values(space, chart);
    UnionFind uf(space.size());
    for (const auto& f : out.gens)
      for_each_multiple(f, chart, space, [&](std::size_t a, std::size_t b) { uf.unite(a, b); });

    std::vector<std::size_t> order(space.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    auto to_monomial = [&](std::size_t i) {
      std::vector<int> labels;
      for (int idx : space.indices(i)) labels.push_back(chart.variables[idx]);
      return GradedMonomial{std::move(labels)};
    };

    std::vector<IdealGenerator> fresh;
    for (std::size_t lo = 0; lo < order.size();) {
      std::size_t hi = lo;
      while (hi < order.size() && values[order[hi]] == values[order[lo]]) ++hi;
      const std::size_t rep = order[lo];  // lex-least: indices are in lex order
      for (std::size_t j = lo + 1; j < hi; ++j)
        if (uf.unite(rep, order[j]))
          fresh.push_back({to_monomial(rep), to_monomial(order[j]), GeneratorOrigin::OracleMinimal});
      lo = hi;
    }
    out.betti[n] = static_cast<std::int64_t>(fresh.size());
    out.gens.insert(out.gens.end(), fresh.begin(), fresh.end());
  }
  return out;
}

std::int64_t betti_13(const NumericalSemigroup& s) {
  require_canonical(s);
  require_linearly_normal(classify(s));
  const auto quadrics = minimal_generators(s, 2);
  return dim_ideal_oracle(s, 3) - graded_span_dim(quadrics.gens, s, 3);
}

bool is_cut_by_quadrics(const NumericalSemigroup& s) {
  if (s.is_trivial()) throw Error(ErrorKind::TrivialSemigroup, "no gaps");
  if (s.genus() < 3)
    throw Error(ErrorKind::GenusTooSmall, "genus " + std::to_string(s.genus()) + " is below 3");
  if (s.contains(2)) return true;  // rational normal curve
  require_linearly_normal(classify(s));
  const auto mg = minimal_generators(s, 4);
  return mg.betti[3] == 0 && mg.betti[4] == 0;
}

}  // namespace canonica
