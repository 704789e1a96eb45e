#include "canonica/verification.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "canonica/brill_noether.hpp"
#include "canonica/canonical_model.hpp"
#include "canonica/classification.hpp"
#include "canonica/errors.hpp"
#include "canonica/ideal_synthesis.hpp"

namespace canonica {

namespace {

struct Collector {
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {}, bool strict_only = false) {
    checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail), strict_only});
  }

  // Evaluates fn; an Error thrown inside counts as a failure of `name`.
  template <typename Fn>
  void guarded(const std::string& name, Fn&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      add(name, false, std::string(to_string(e.kind())) + ": " + e.what());
    }
  }
};

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void core_checks(const NumericalSemigroup& s, Collector& c) {
  const int gamma = s.frobenius();
  const int g = s.genus();
  c.add("core.count", static_cast<int>(s.elements_up_to(gamma).size()) + g == gamma + 1);

  bool closed = true;
  for (int a = 1; a <= 2 * gamma + 2 && closed; ++a)
    for (int b = a; a + b <= 2 * gamma + 2; ++b)
      if (s.contains(a) && s.contains(b) && !s.contains(a + b)) {
        closed = false;
        break;
      }
  c.add("core.closed", closed);

  for (auto enc : {Encoding::Generators, Encoding::Gaps})
    c.add(enc == Encoding::Gaps ? "core.roundtrip.gaps" : "core.roundtrip.gens",
          parse_semigroup(render(s, enc)) == s);

  if (s.is_trivial()) return;
  const bool sym = is_symmetric(s), pseudo = is_pseudo_symmetric(s);
  c.add("core.symmetric_iff_gamma_2g-1", sym == (gamma == 2 * g - 1));
  c.add("core.pseudo_implies_gamma_2g-2", !pseudo || gamma == 2 * g - 2);
  c.add("core.symmetric_excludes_pseudo", !(sym && pseudo));

  std::vector<int> reflected;
  for (int l : s.gaps()) reflected.push_back(gamma - l);
  std::sort(reflected.begin(), reflected.end());
  c.add("core.kappa_identity", kappa_set(s).below == reflected);
}

void classification_checks(const NumericalSemigroup& s, Collector& c) {
  const int gamma = s.frobenius();
  const CurveClass cls = classify(s);
  c.add("class.gorenstein_eta_symmetric",
        cls.gorenstein == (cls.eta == 0) && cls.gorenstein == is_symmetric(s));
  c.add("class.kunz_eta_pseudo", cls.kunz == (cls.eta == 1) && cls.kunz == is_pseudo_symmetric(s));
  c.add("class.kunz_implies_nearly_gorenstein", !cls.kunz || cls.nearly_gorenstein);

  const auto k = kappa_set(s);
  auto k_plus = k.below;
  if (!std::binary_search(k_plus.begin(), k_plus.end(), gamma)) k_plus.push_back(gamma);
  std::sort(k_plus.begin(), k_plus.end());
  const bool closure_is_k_plus = semigroup_closure(k.below, gamma) == k_plus;
  c.add("class.nearly_gorenstein_mu_closure",
        cls.nearly_gorenstein == (cls.mu == 1) && cls.nearly_gorenstein == closure_is_k_plus);

  if (s.genus() >= 3 && (cls.gorenstein || cls.nearly_gorenstein)) {
    const auto e = eb_conditions(s);
    const int special = int(e.plane_quintic) + int(e.trigonal_gorenstein) + int(e.kunz);
    c.guarded("class.eb_exclusive", [&] {
      const auto label = eb_classify(s);
      const bool ok = e.hyperelliptic ? label == EbLabel::Quadrics : special <= 1;
      c.add("class.eb_exclusive", ok, "several label conditions hold");
    });
    if (!cls.gorenstein && !cls.hyperelliptic) {
      c.guarded("class.quadrics_iff_beta13_zero", [&] {
        const bool quadrics = eb_classify(s) == EbLabel::Quadrics;
        const auto b13 = betti_13(s);
        c.add("class.quadrics_iff_beta13_zero", quadrics == (b13 == 0),
              "label " + std::string(to_string(eb_classify(s))) + ", beta_13 = " + std::to_string(b13));
      });
    }
  }
}

void canonical_checks(const NumericalSemigroup& s, const CheckOptions& opts, Collector& c) {
  const int gamma = s.frobenius();
  const CurveClass cls = classify(s);
  for (int n = 2; n <= opts.max_degree; ++n) {
    const std::string name = "canon.formula_eq_oracle.n" + std::to_string(n);
    c.guarded(name, [&] {
      const auto f = dim_ideal_formula(s, n);
      const auto o = dim_ideal_oracle(s, n);
      c.add(name, f == o, "formula " + std::to_string(f) + ", oracle " + std::to_string(o));
    });
    const std::string par = "canon.oracle_serial_eq_parallel.n" + std::to_string(n);
    c.guarded(par, [&] { c.add(par, dim_ideal_oracle(s, n, false) == dim_ideal_oracle(s, n, true)); });
    const std::string h0 = "canon.h0_blocks_eq_closed.n" + std::to_string(n);
    c.guarded(h0, [&] {
      h0_omega_n(s, n);
      c.add(h0, true);
    });
  }

  std::vector<std::vector<int>> gammas{{}};
  for (int n = 1; n <= opts.max_degree + 1; ++n) gammas.push_back(gamma_sumset(s, n).gamma_n);
  bool monotone = true;
  for (int n = 1; n <= opts.max_degree; ++n) {
    monotone = monotone && is_subset(gammas[n], gammas[n + 1]);
    monotone = monotone && sigma_n(s, n) <= sigma_n(s, n + 1);
  }
  c.add("canon.filtration_monotone", monotone);

  if (!cls.gorenstein) {
    std::vector<int> block;
    for (int v = gamma; v <= 2 * (gamma - 1); ++v) block.push_back(v);
    c.add("canon.gamma2_top_block", is_subset(block, gammas[2]));
    bool tops = true;
    for (int n = 3; n <= std::min(5, opts.max_degree); ++n) {
      std::vector<int> top;
      for (int v = (n - 1) * (gamma - 1) + 1; v <= n * (gamma - 1); ++v) top.push_back(v);
      tops = tops && is_subset(top, gammas[n]);
    }
    c.add("canon.gamma_n_top_block", tops);
  }
  if (cls.nearly_gorenstein) {
    bool empty = true;
    for (int n = 2; n <= opts.max_degree; ++n) empty = empty && gamma_sumset(s, n).a_n.empty();
    c.add("canon.a_n_empty", empty);
  }
}

void ideal_checks(const NumericalSemigroup& s, const CheckOptions& opts, Collector& c) {
  const CurveClass cls = classify(s);
  const int top = std::max(opts.max_degree, 3);
  const auto mg = minimal_generators(s, top);

  c.guarded("ideal.union_find_eq_exact", [&] {
    std::vector<IdealGenerator> quadrics;
    for (const auto& f : mg.gens)
      if (f.degree() == 2) quadrics.push_back(f);
    bool ok = true;
    for (int n = 2; n <= 3; ++n) ok = ok && graded_span_dim(quadrics, s, n) == graded_span_dim_exact(quadrics, s, n);
    c.add("ideal.union_find_eq_exact", ok);
  });

  if (cls.nearly_gorenstein && !cls.gorenstein) {
    c.guarded("ideal.listed_generators_vanish", [&] {
      const CanonicalChart chart(s);
      const auto listed = paper_generators(s);
      const bool ok = std::all_of(listed.begin(), listed.end(), [&](const IdealGenerator& f) { return f.vanishes(chart); });
      c.add("ideal.listed_generators_vanish", ok);
    });

    std::vector<IdealGenerator> upto3;
    for (const auto& f : mg.gens)
      if (f.degree() <= 3) upto3.push_back(f);
    bool generated = true;
    for (int n = 2; n <= opts.max_degree; ++n)
      generated = generated && graded_span_dim(upto3, s, n) == dim_ideal_oracle(s, n);
    c.add("ideal.generated_in_degree_le_3", generated);

    bool none_above = true;
    for (int n = 4; n <= top; ++n) none_above = none_above && mg.betti[n] == 0;
    c.add("ideal.no_minimal_generators_above_3", none_above);
    if (!cls.kunz) c.add("ideal.not_kunz_cut_by_quadrics", mg.betti[3] == 0);
  }

  const auto triples = exceptional_triples(s);
  int bad = 0;
  bool irreducible = true;
  std::string first;
  for (const auto& t : triples) {
    const auto cases = classify_triple(s, t);
    if (cases.size() != 1) {
      if (bad++ == 0)
        first = "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
    }
    if (reduce_triple(s, t).kind != TripleReduction::Kind::Irreducible) irreducible = false;
  }
  c.add("ideal.exceptional_triples_irreducible", irreducible, "an exceptional triple reduced");
  c.add("ideal.exceptional_triples_classified", bad == 0,
        std::to_string(bad) + " of " + std::to_string(triples.size()) + " triples unclassified or ambiguous, first " +
            first,
        true);
}

void brill_noether_checks(const NumericalSemigroup& s, const CheckOptions& opts, Collector& c) {
  const auto fast = brill_noether(s, SearchMode::Parallel);
  if (s.genus() <= 20) {
    const auto slow = brill_noether(s, SearchMode::Serial);
    const bool same = fast.gonality.value == slow.gonality.value &&
                      fast.gonality.witness == slow.gonality.witness && fast.models == slow.models &&
                      fast.clifford.has_value() == slow.clifford.has_value() &&
                      (!fast.clifford || (fast.clifford->value == slow.clifford->value &&
                                          fast.clifford->witness == slow.clifford->witness));
    c.add("bn.serial_eq_parallel", same);
  }
  const int gon = fast.gonality.value;
  c.add("bn.gonality_le_alpha", gon <= s.multiplicity());
  c.add("bn.gonality2_iff_hyperelliptic_or_ordinary", (gon == 2) == (s.contains(2) || is_ordinary(s)),
        "gonality " + std::to_string(gon));
  if (s.genus() >= 2)
    c.add("bn.trigonal_shape_iff_gonality3", (trigonal_shape(s) != TrigonalShape::None) == (gon == 3),
          "shape " + std::string(to_string(trigonal_shape(s))) + ", gonality " + std::to_string(gon));

  if (opts.sheaf_identities && s.genus() <= 12) {
    bool rr = true, cliff = true;
    for_each_model(s, [&](const MonomialSheafModel& f) {
      try {
        const auto inv = sheaf_invariants(s, f);
        cliff = cliff && inv.cliff == cliff_paper_formula(s, f);
      } catch (const Error&) {
        rr = false;
      }
    });
    c.add("bn.riemann_roch", rr);
    c.add("bn.cliff_formula_identity", cliff);
  }
}

}  // namespace

std::vector<Check> property_checks(const NumericalSemigroup& s, const CheckOptions& opts) {
  Collector c;
  core_checks(s, c);
  if (s.is_trivial()) return c.checks;
  if (s.genus() >= 2) c.guarded("class", [&] { classification_checks(s, c); });
  if (s.genus() >= 3 && !s.contains(2)) {
    c.guarded("canon", [&] { canonical_checks(s, opts, c); });
    c.guarded("ideal", [&] { ideal_checks(s, opts, c); });
  }
  c.guarded("bn", [&] { brill_noether_checks(s, opts, c); });
  return c.checks;
}

std::vector<Check> genus_checks(int genus, const std::vector<NumericalSemigroup>& all) {
  Collector c;
  const bool sorted = std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.gaps() < b.gaps();
  });
  c.add("enum.lexicographic_order", sorted);
  bool exact_genus = std::all_of(all.begin(), all.end(), [&](const auto& s) { return s.genus() == genus; });
  c.add("enum.genus", exact_genus);

  if (genus <= 9) {
    // subsets of [1, 2g-1] of size g whose complement is additively closed
    std::size_t count = genus == 0 ? 1 : 0;
    const int top = 2 * genus - 1;
    if (genus > 0) {
      for (std::uint32_t mask = 0; mask < (1u << top); ++mask) {
        if (std::popcount(mask) != genus) continue;
        auto gap = [&](int x) { return x >= 1 && x <= top && ((mask >> (x - 1)) & 1); };
        bool ok = true;
        for (int a = 1; a <= top && ok; ++a)
          for (int b = a; a + b <= top; ++b)
            if (!gap(a) && !gap(b) && gap(a + b)) {
              ok = false;
              break;
            }
        if (ok) ++count;
      }
    }
    c.add("enum.count_eq_subset_filter", count == all.size(),
          std::to_string(all.size()) + " enumerated, " + std::to_string(count) + " by subset filter");
  }
  return c.checks;
}

Check family_check(int alpha) {
  const auto member = kunz_family(alpha);
  const auto ci = clifford_index(member.semigroup);
  Check out;
  out.name = "family.clifford_index_eq_alpha-2";
  out.passed = ci && ci->value == alpha - 2;
  if (!out.passed)
    out.detail = "clifford index " + (ci ? std::to_string(ci->value) : std::string("none")) + ", expected " +
                 std::to_string(alpha - 2);
  return out;
}

}  // namespace canonica
