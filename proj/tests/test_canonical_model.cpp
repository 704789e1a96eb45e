#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "canonica/canonical_model.hpp"
#include "canonica/classification.hpp"
#include "canonica/errors.hpp"
#include "canonica/kernels.hpp"
#include "canonica/monomials.hpp"
#include "oracles.hpp"

using namespace canonica;

namespace {
NumericalSemigroup gens(std::initializer_list<int> g) {
  const std::vector<int> v(g);
  return NumericalSemigroup::from_generators(v);
}
std::vector<int> below(const std::vector<int>& xs, int hi) {
  std::vector<int> out;
  for (int x : xs)
    if (x <= hi) out.push_back(x);
  return out;
}
}  // namespace

TEST_CASE("chart") {
  const CanonicalChart c(gens({3, 7, 11}));
  CHECK(c.variables == std::vector<int>{1, 2, 4, 5, 8});
  CHECK(c.exponents() == std::vector<int>{7, 6, 4, 3, 0});
  CHECK(c.exponent_of(8) == 0);
  CHECK(c.label_index(5) == 3);
  const GradedMonomial m{{1, 5}};
  CHECK(m.value(c) == 10);
  CHECK(m.to_string() == "X_1*X_5");
}

TEST_CASE("monomial space") {
  const MonomialSpace sp(5, 3);
  CHECK(sp.size() == 35);
  CHECK(MonomialSpace::count(5, 3) == 35);
  CHECK(MonomialSpace::count(50, 4) == 292825);
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const auto idx = sp.indices(i);
    CHECK(std::is_sorted(idx.begin(), idx.end()));
    CHECK(sp.index_of(idx) == i);
    if (i) CHECK(sp.key(i - 1) < sp.key(i));
  }
  const std::vector<int> unsorted = {4, 0, 2};
  const std::vector<int> sorted = {0, 2, 4};
  CHECK(sp.index_of(unsorted) == sp.index_of(sorted));
}

TEST_CASE("union-find") {
  UnionFind uf(5);
  CHECK(uf.unite(0, 1));
  CHECK(uf.unite(2, 3));
  CHECK_FALSE(uf.unite(1, 0));
  CHECK(uf.unite(1, 3));
  CHECK(uf.find(0) == uf.find(2));
  CHECK(uf.find(4) != uf.find(0));
}

TEST_CASE("sumsets: <3,7,11>") {
  const auto s = gens({3, 7, 11});
  const auto s1 = gamma_sumset(s, 1);
  CHECK(s1.gamma_n == std::vector<int>{0, 3, 4, 6, 7});
  CHECK(s1.a_n.empty());
  const auto s2 = gamma_sumset(s, 2);
  CHECK(below(s2.gamma_n, 8) == std::vector<int>{0, 3, 4, 6, 7, 8});
  CHECK(s2.a_n.empty());
  CHECK(sigma_n(s, 2) == 1);
  CHECK(sigma_n(s, 3) == 1);
  CHECK(sigma_n(gens({3, 7}), 2) == 0);
}

TEST_CASE("sumsets against std::set, genus 2..8") {
  for (int g = 2; g <= 8; ++g)
    for (const auto& s : enumerate_genus(g))
      for (int n = 1; n <= 4; ++n) {
        const auto o = oracle::sumset(s, n);
        const auto ss = gamma_sumset(s, n);
        CHECK(ss.gamma_n == std::vector<int>(o.begin(), o.end()));
        if (n >= 2) {
          const auto prev = oracle::sumset(s, n - 1);
          std::vector<int> a;
          for (int v : o)
            if (v <= s.frobenius() - 1 && !prev.count(v)) a.push_back(v);
          CHECK(ss.a_n == a);
        }
      }
}

TEST_CASE("h0 of omega^n") {
  const auto s = gens({3, 7, 11});
  CHECK(h0_omega_n(s, 2) == 12);
  CHECK(h0_omega_n(s, 3) == 19);
  CHECK(h0_omega_n_closed(s, 3) == 19);
  CHECK(h0_omega_n(gens({3, 7}), 2) == 15);
  CHECK_THROWS_AS(h0_omega_n(gens({2, 7}), 2), Error);
}

TEST_CASE("dim I_n: fixtures") {
  const auto s = gens({3, 7, 11});
  CHECK(dim_ideal_formula(s, 2) == 3);
  CHECK(dim_ideal_formula(s, 3) == 16);
  CHECK(dim_ideal_oracle(s, 2) == 3);
  CHECK(dim_ideal_oracle(s, 3) == 16);
  CHECK(dim_ideal_formula(gens({3, 7}), 2) == 6);
  try {
    dim_ideal_oracle(gens({2, 7}), 2);
    FAIL("expected Hyperelliptic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Hyperelliptic);
  }
}

TEST_CASE("dim I_n: formula, library oracle and naive enumeration agree, genus 3..8") {
  for (int g = 3; g <= 8; ++g)
    for (const auto& s : enumerate_genus(g)) {
      if (s.contains(2)) continue;
      for (int n = 2; n <= 4; ++n) {
        CAPTURE(render(s));
        CAPTURE(n);
        const auto naive = oracle::dim_ideal(s, n);
        CHECK(dim_ideal_oracle(s, n) == naive);
        CHECK(dim_ideal_oracle(s, n, true) == naive);
        CHECK(dim_ideal_formula(s, n) == naive);
      }
    }
}

TEST_CASE("monomial value tables: serial = parallel") {
  for (const auto* text : {"gens:3,7,11", "gens:4,11,13", "gens:5,18,19,21", "gens:6,7,8,9,11"}) {
    const auto s = parse_semigroup(text);
    const auto e = CanonicalChart(s).exponents();
    for (int n = 1; n <= 4; ++n) CHECK(monomial_value_table_serial(e, n) == monomial_value_table_parallel(e, n));
  }
}

TEST_CASE("monomial budget") {
  CHECK(monomial_cap() == 5'000'000);
  const auto big = parse_semigroup("gens:8,51,52,53,54,55,57");  // genus 50 family member
  CHECK_NOTHROW(check_monomial_budget(big, 3));
  try {
    check_monomial_budget(big, 6);
    FAIL("expected CombinatorialBlowup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CombinatorialBlowup);
  }
}
