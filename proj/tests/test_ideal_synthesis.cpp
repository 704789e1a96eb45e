#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "canonica/classification.hpp"
#include "canonica/errors.hpp"
#include "canonica/ideal_synthesis.hpp"
#include "oracles.hpp"

using namespace canonica;

namespace {
NumericalSemigroup gens(std::initializer_list<int> g) {
  const std::vector<int> v(g);
  return NumericalSemigroup::from_generators(v);
}

std::vector<oracle::Binomial> as_binomials(const std::vector<IdealGenerator>& gens) {
  std::vector<oracle::Binomial> out;
  for (const auto& f : gens) out.push_back({f.plus.labels, f.minus.labels});
  return out;
}

std::set<std::string> strings(const std::vector<IdealGenerator>& gens) {
  std::set<std::string> out;
  for (const auto& f : gens) out.insert(f.to_string());
  return out;
}

std::vector<IdealGenerator> of_degree(const std::vector<IdealGenerator>& gens, int d) {
  std::vector<IdealGenerator> out;
  for (const auto& f : gens)
    if (f.degree() == d) out.push_back(f);
  return out;
}

bool nearly_gorenstein_only(const NumericalSemigroup& s) {
  const auto c = classify(s);
  return c.nearly_gorenstein && !c.gorenstein && !c.hyperelliptic;
}
}  // namespace

TEST_CASE("partitions") {
  const auto s = gens({3, 7, 11});
  const auto p6 = partitions(s, 6);
  CHECK(p6.pairs == std::vector<std::pair<int, int>>{{1, 5}, {2, 4}});
  CHECK(p6.minimal() == std::pair<int, int>{1, 5});
  CHECK(p6.nu() == 1);
  CHECK(partitions(s, 11).empty());
  CHECK(partitions(s, 11).nu() == 0);
  CHECK(partitions(s, 2).pairs == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK_THROWS_AS(partitions(s, 1), Error);
  CHECK_THROWS_AS(partitions(s, 17), Error);
  CHECK(is_minimal_pair(s, 1, 5));
  CHECK_FALSE(is_minimal_pair(s, 2, 4));
  CHECK_FALSE(is_minimal_pair(s, 3, 3));
}

TEST_CASE("partitions: the first pair is the minimal one, genus 3..8") {
  for (int g = 3; g <= 8; ++g)
    for (const auto& s : enumerate_genus(g))
      for (int t = 2; t <= 2 * s.frobenius(); ++t) {
        const auto p = partitions(s, t);
        std::vector<std::pair<int, int>> brute;
        for (int a = 1; 2 * a <= t; ++a)
          if (s.is_gap(a) && s.is_gap(t - a)) brute.emplace_back(a, t - a);
        REQUIRE(p.pairs == brute);
        int minimal = 0;
        for (const auto& [a, b] : brute) minimal += is_minimal_pair(s, a, b);
        CHECK(minimal == (brute.empty() ? 0 : 1));
        if (!brute.empty()) CHECK(is_minimal_pair(s, p.minimal().first, p.minimal().second));
      }
}

TEST_CASE("exceptional triples: fixtures") {
  const auto s = gens({3, 7, 11});
  CHECK(exceptional_triples(s) == std::vector<Triple>{{2, 2, 2}, {2, 2, 5}, {4, 4, 4}});
  CHECK(classify_triple(s, {4, 4, 4}) == std::vector<TripleCase>{TripleCase::V});
  CHECK(classify_triple(s, {2, 2, 2}) == std::vector<TripleCase>{TripleCase::I});
  CHECK(classify_triple(s, {2, 2, 5}) == std::vector<TripleCase>{TripleCase::I});
  CHECK(exceptional_triples(gens({3, 5, 7})) == std::vector<Triple>{{2, 2, 2}});
  CHECK(to_string(TripleCase::IV) == "IV");
}

TEST_CASE("exceptional triples: exhaustive definition, genus 3..8") {
  for (int g = 3; g <= 8; ++g)
    for (const auto& s : enumerate_genus(g)) {
      std::vector<Triple> brute;
      const auto& G = s.gaps();
      const int gamma = s.frobenius();
      for (int a : G)
        for (int b : G)
          for (int c : G) {
            if (a > b || b > c || a == 1 || c == gamma) continue;
            if (is_minimal_pair(s, a, b) && is_minimal_pair(s, a, c) && is_minimal_pair(s, b, c))
              brute.push_back({a, b, c});
          }
      CAPTURE(render(s));
      CHECK(exceptional_triples(s) == brute);
      for (const auto& t : brute) CHECK(reduce_triple(s, t).kind == TripleReduction::Kind::Irreducible);
    }
}

TEST_CASE("reduce_triple") {
  const auto s = gens({3, 7, 11});
  const auto r = reduce_triple(s, {2, 4, 4});
  CHECK(r.kind == TripleReduction::Kind::NormalOne);
  CHECK(r.result == Triple{1, 1, 8});
  CHECK(r.trace == std::vector<Triple>{{2, 4, 4}, {1, 4, 5}, {1, 1, 8}});
  CHECK(reduce_triple(s, {4, 4, 4}).kind == TripleReduction::Kind::Irreducible);
  const auto one = reduce_triple(s, {1, 1, 5});
  CHECK(one.kind == TripleReduction::Kind::NormalOne);
  CHECK(one.result == Triple{1, 1, 5});
  CHECK(one.trace.size() == 1);
}

TEST_CASE("reduce_triple preserves the value and terminates, genus 3..7") {
  for (int g = 3; g <= 7; ++g)
    for (const auto& s : enumerate_genus(g)) {
      const auto& G = s.gaps();
      for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i; j < G.size(); ++j)
          for (std::size_t k = j; k < G.size(); ++k) {
            const Triple t{G[i], G[j], G[k]};
            const auto r = reduce_triple(s, t);
            CHECK(r.result[0] + r.result[1] + r.result[2] == t[0] + t[1] + t[2]);
            for (int x : r.result) CHECK(s.is_gap(x));
            CHECK(r.trace.front() == t);
            CHECK(r.trace.back() == r.result);
          }
    }
}

TEST_CASE("listed generators: <3,7,11>") {
  const auto s = gens({3, 7, 11});
  const auto listed = paper_generators(s);
  CHECK(strings(of_degree(listed, 2)) ==
        std::set<std::string>{"X_1*X_5 - X_2*X_4", "X_1*X_8 - X_4*X_5", "X_2*X_8 - X_5*X_5"});
  CHECK(strings(of_degree(listed, 3)) ==
        std::set<std::string>{"X_4*X_4*X_4 - X_2*X_2*X_8", "X_2*X_4*X_4 - X_1*X_1*X_8"});
  const CanonicalChart chart(s);
  for (const auto& f : listed) CHECK(f.vanishes(chart));
  CHECK(graded_span_dim(listed, s, 2) == 3);
  CHECK(graded_span_dim(of_degree(listed, 2), s, 3) == 13);
  CHECK(to_string(GeneratorOrigin::CubicKunzB) == "CUBIC_KUNZ_B");
}

TEST_CASE("listed generators: variants") {
  const auto s = gens({3, 7, 11});
  const auto literal = paper_generators(s, PaperVariant::LiteralQuadricRange);
  CHECK(graded_span_dim(of_degree(literal, 2), s, 2) == 1);

  const auto intro = paper_generators(s, PaperVariant::IntroCubicConstant);
  const CanonicalChart chart(s);
  int nonvanishing = 0;
  for (const auto& f : intro) nonvanishing += !f.vanishes(chart);
  CHECK(nonvanishing == 1);
}

TEST_CASE("listed generators: preconditions") {
  auto kind = [](const NumericalSemigroup& s) {
    try {
      paper_generators(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvariantViolation;
  };
  CHECK(kind(gens({3, 7})) == ErrorKind::Gorenstein);
  CHECK(kind(gens({2, 7})) == ErrorKind::Hyperelliptic);
  CHECK(kind(gens({3, 8, 10})) == ErrorKind::NotNearlyGorenstein);
}

TEST_CASE("listed generators vanish, quadrics only when not Kunz, genus 3..9") {
  int seen = 0;
  for (int g = 3; g <= 9; ++g)
    for (const auto& s : enumerate_genus(g)) {
      if (!nearly_gorenstein_only(s)) continue;
      ++seen;
      const auto listed = paper_generators(s);
      const CanonicalChart chart(s);
      for (const auto& f : listed) CHECK(f.vanishes(chart));
      if (!classify(s).kunz) CHECK(of_degree(listed, 3).empty());
      CHECK(graded_span_dim(listed, s, 2) == dim_ideal_oracle(s, 2));
    }
  CHECK(seen > 50);
}

TEST_CASE("span dimension: union-find, exact and mod-p rank agree") {
  for (int g = 3; g <= 7; ++g)
    for (const auto& s : enumerate_genus(g)) {
      if (s.contains(2)) continue;
      const auto mg = minimal_generators(s, 3);
      const auto quadrics = of_degree(mg.gens, 2);
      for (int n = 2; n <= 3; ++n) {
        CAPTURE(render(s));
        const auto uf = graded_span_dim(quadrics, s, n);
        CHECK(uf == graded_span_dim_exact(quadrics, s, n));
        CHECK(uf == oracle::span_dim_mod_p(s, as_binomials(quadrics), n));
        CHECK(graded_span_dim(mg.gens, s, n) == oracle::span_dim_mod_p(s, as_binomials(mg.gens), n));
      }
    }
  CHECK(graded_span_dim({}, gens({3, 7, 11}), 3) == 0);
  CHECK_THROWS_AS(graded_span_dim({}, gens({3, 7, 11}), 1), Error);
}

TEST_CASE("minimal generators: fixtures") {
  const auto s = gens({3, 7, 11});
  const auto mg = minimal_generators(s, 4);
  CHECK(mg.betti[2] == 3);
  CHECK(mg.betti[3] == 3);
  CHECK(mg.betti[4] == 0);
  CHECK(betti_13(s) == 3);
  CHECK_FALSE(is_cut_by_quadrics(s));
  const CanonicalChart chart(s);
  for (const auto& f : mg.gens) CHECK(f.vanishes(chart));

  const auto t = minimal_generators(gens({3, 7}), 3);
  CHECK(t.betti[2] == 6);
  CHECK(t.betti[3] == 3);

  const auto q = minimal_generators(gens({3, 4}), 4);
  CHECK(q.betti[2] == 0);
  CHECK(q.betti[3] == 0);
  CHECK(q.betti[4] == 1);
  CHECK_FALSE(is_cut_by_quadrics(gens({3, 4})));

  CHECK(betti_13(gens({4, 5})) >= 1);
  CHECK(is_cut_by_quadrics(gens({2, 11})));
}

TEST_CASE("minimal generators span I_n and count the Betti numbers, genus 3..7") {
  for (int g = 3; g <= 7; ++g)
    for (const auto& s : enumerate_genus(g)) {
      if (s.contains(2)) continue;
      const auto mg = minimal_generators(s, 4);
      for (int n = 2; n <= 4; ++n) {
        CAPTURE(render(s));
        CHECK(graded_span_dim(mg.gens, s, n) == oracle::dim_ideal(s, n));
        std::vector<IdealGenerator> lower;
        for (const auto& f : mg.gens)
          if (f.degree() < n) lower.push_back(f);
        CHECK(mg.betti[n] == oracle::dim_ideal(s, n) - oracle::span_dim_mod_p(s, as_binomials(lower), n));
      }
    }
}

TEST_CASE("redundant generators") {
  const auto s = gens({3, 7, 11});
  auto list = paper_generators(s);
  list.insert(list.begin() + 1, list.front());  // duplicate quadric
  const auto red = redundant_generators(list, s);
  CHECK_FALSE(red[0]);
  CHECK(red[1]);
}
