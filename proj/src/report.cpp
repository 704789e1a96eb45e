#include "canonica/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "canonica/brill_noether.hpp"
#include "canonica/canonical_model.hpp"
#include "canonica/classification.hpp"
#include "canonica/errors.hpp"
#include "canonica/ideal_synthesis.hpp"

namespace canonica {

using nlohmann::json;

namespace {

json model_json(const MonomialSheafModel& f) { return {{"delta", f.delta}, {"a_max", f.a_max}}; }

json strings(const std::vector<IdealGenerator>& gens) {
  json out = json::array();
  for (const auto& f : gens) out.push_back(f.to_string());
  return out;
}

struct Builder {
  json report;
  void error(const std::string& section, const Error& e) {
    report["errors"].push_back(
        {{"section", section}, {"kind", std::string(to_string(e.kind()))}, {"message", e.what()}});
  }
  void warn(const std::string& code, const std::string& message) {
    report["warnings"].push_back({{"code", code}, {"message", message}});
  }
};

// Runs fn; a domain error is recorded against `section` instead of escaping.
template <typename Fn>
void section(Builder& b, const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvariantViolation) throw;
    b.error(name, e);
  }
}

std::string triple_string(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

}  // namespace

json analyze(const NumericalSemigroup& s, const ReportOptions& opts) {
  if (opts.degree < 2 || opts.degree > 6)
    throw Error(ErrorKind::InvalidArgument, "--degree must lie in [2, 6]");
  const auto started = std::chrono::steady_clock::now();

  Builder b;
  json& r = b.report;
  r["schema"] = 1;
  r["semigroup"] = render(s);
  r["genus"] = s.genus();
  r["frobenius"] = s.frobenius();
  r["alpha"] = s.multiplicity();
  r["gaps"] = s.gaps();
  for (const char* key : {"eta", "mu", "flags", "trigonal_shape", "eb_label", "gonality",
                          "gonality_witness", "bpf_g13", "clifford_index", "clifford_witness",
                          "dim_In_formula", "dim_In_oracle", "betti", "is_cut_by_quadrics",
                          "paper_generators", "minimal_generators", "exceptional_triples"})
    r[key] = nullptr;
  r["degree"] = opts.degree;
  r["diffs"] = json::array();
  r["warnings"] = json::array();
  r["errors"] = json::array();

  if (s.is_trivial()) {
    b.error("semigroup", Error(ErrorKind::TrivialSemigroup, "S = N has no gaps"));
    return r;
  }

  // The stated family list at this multiplicity, when it describes S.
  if (s.multiplicity() >= 3) {
    const int alpha = s.multiplicity();
    const auto stated = kunz_family_stated_generators(alpha);
    const auto member = NumericalSemigroup::from_generators(stated);
    const int expected = (2 * alpha - 4) * alpha + 2;
    if (member == s && (s.frobenius() != expected || !is_pseudo_symmetric(s))) {
      const auto k = kunz_family(alpha);
      b.warn(warning_code::kFamilyMember,
             "family member for alpha = " + std::to_string(alpha) + " is listed as " + render(s) +
                 ", which has gamma = " + std::to_string(s.frobenius()) + " (expected " +
                 std::to_string(expected) + ")" + (is_symmetric(s) ? " and is symmetric" : "") +
                 "; the pseudo-symmetric member is " + render(k.semigroup));
    }
  }

  std::optional<CurveClass> cls;
  section(b, "classification", [&] {
    cls = classify(s);
    r["eta"] = cls->eta;
    r["mu"] = cls->mu;
    r["flags"] = {{"gorenstein", cls->gorenstein},
                  {"nearly_gorenstein", cls->nearly_gorenstein},
                  {"kunz", cls->kunz},
                  {"hyperelliptic", cls->hyperelliptic}};
    r["trigonal_shape"] = std::string(to_string(trigonal_shape(s)));
  });
  section(b, "eb_label", [&] { r["eb_label"] = std::string(to_string(eb_classify(s))); });

  section(b, "brill_noether", [&] {
    const auto bn = brill_noether(s);
    r["gonality"] = bn.gonality.value;
    r["gonality_witness"] = model_json(bn.gonality.witness);
    r["bpf_g13"] = bn.bpf_g13;
    if (bn.clifford) {
      r["clifford_index"] = bn.clifford->value;
      r["clifford_witness"] = model_json(bn.clifford->witness);
    } else {
      b.warn(warning_code::kNoContributor, "no sheaf model has h0 >= 2 and h1 >= 2");
    }
  });

  if (s.contains(2) && s.genus() >= 3) r["is_cut_by_quadrics"] = true;  // rational normal curve

  std::optional<MinimalGenerators> mg;
  section(b, "canonical_model", [&] {
    json formula = json::array(), oracle = json::array();
    for (int n = 2; n <= opts.degree; ++n) {
      const auto f = dim_ideal_formula(s, n);
      const auto o = dim_ideal_oracle(s, n, true);
      formula.push_back(f);
      oracle.push_back(o);
      if (f != o)
        b.warn(warning_code::kFormulaOracle, "dim I_" + std::to_string(n) + ": formula " +
                                                 std::to_string(f) + ", oracle " + std::to_string(o));
    }
    r["dim_In_formula"] = formula;
    r["dim_In_oracle"] = oracle;
  });

  section(b, "minimal_generators", [&] {
    const bool ln = cls && (cls->gorenstein || cls->nearly_gorenstein);
    const int top = std::max(opts.degree, ln ? 4 : 3);
    mg = minimal_generators(s, top);
    std::vector<IdealGenerator> shown;
    for (const auto& f : mg->gens)
      if (f.degree() <= opts.degree) shown.push_back(f);
    r["minimal_generators"] = strings(shown);
    json betti = json::object();
    for (int n = 2; n <= top; ++n) betti["0," + std::to_string(n)] = mg->betti[n];
    betti["1,3"] = mg->betti[3];
    r["betti"] = betti;
    if (ln)
      r["is_cut_by_quadrics"] = mg->betti[3] == 0 && mg->betti[4] == 0;
    else
      b.error("is_cut_by_quadrics", Error(ErrorKind::NotLinearlyNormal, "mu = " + std::to_string(cls ? cls->mu : -1)));
  });

  section(b, "paper_generators", [&] {
    const auto listed = paper_generators(s);
    r["paper_generators"] = strings(listed);

    // list against the oracle, degree by degree
    const auto redundant = redundant_generators(listed, s);
    for (int n = 2; n <= 3; ++n) {
      json d;
      d["degree"] = n;
      int count = 0;
      json red = json::array();
      for (std::size_t i = 0; i < listed.size(); ++i) {
        if (listed[i].degree() != n) continue;
        ++count;
        if (redundant[i]) red.push_back(listed[i].to_string());
      }
      std::vector<IdealGenerator> upto;
      for (const auto& f : listed)
        if (f.degree() <= n) upto.push_back(f);
      const auto span = graded_span_dim(upto, s, n);
      const auto dim = dim_ideal_oracle(s, n);
      d["listed_count"] = count;
      d["oracle_minimal_count"] = mg ? json(mg->betti[n]) : json(nullptr);
      d["listed_span"] = span;
      d["dim_In"] = dim;
      d["redundant"] = red;
      if (mg) {
        std::vector<IdealGenerator> missing;
        for (const auto& f : mg->gens)
          if (f.degree() == n) missing.push_back(f);
        // oracle generators outside the span of the listed ones
        json outside = json::array();
        for (const auto& f : missing) {
          auto probe = upto;
          probe.push_back(f);
          if (graded_span_dim(probe, s, n) > span) outside.push_back(f.to_string());
        }
        d["oracle_not_in_listed_span"] = outside;
      }
      r["diffs"].push_back(d);
      if (span < dim)
        b.warn(warning_code::kListIncomplete, "listed generators span " + std::to_string(span) + " of dim I_" +
                                                  std::to_string(n) + " = " + std::to_string(dim));
    }

    // quadric index range s <= gamma
    {
      const auto literal = paper_generators(s, PaperVariant::LiteralQuadricRange);
      std::vector<IdealGenerator> quadrics;
      for (const auto& f : literal)
        if (f.degree() == 2) quadrics.push_back(f);
      const auto span = graded_span_dim(quadrics, s, 2);
      const auto dim = dim_ideal_oracle(s, 2);
      if (span < dim)
        b.warn(warning_code::kQuadricRange,
               "quadrics with s <= gamma span " + std::to_string(span) + " of dim I_2 = " +
                   std::to_string(dim) + "; s must run to 2 gamma");
    }

    // cubic partition constant gamma/2 - 1
    if (cls && cls->kunz) {
      const auto intro = paper_generators(s, PaperVariant::IntroCubicConstant);
      const CanonicalChart chart(s);
      for (const auto& f : intro) {
        if (f.origin != GeneratorOrigin::CubicKunzA || f.vanishes(chart)) continue;
        b.warn(warning_code::kCubicConstant,
               f.to_string() + " with a + b = gamma/2 - 1 does not vanish (values " +
                   std::to_string(f.plus.value(chart)) + " vs " + std::to_string(f.minus.value(chart)) +
                   "); a + b = 3 gamma/2 - 1 is needed");
      }
    }
  });

  section(b, "exceptional_triples", [&] {
    json triples = json::array();
    for (const auto& t : exceptional_triples(s)) {
      const auto cases = classify_triple(s, t);
      json names = json::array();
      for (auto c : cases) names.push_back(std::string(to_string(c)));
      triples.push_back({{"triple", t}, {"cases", names}});
      if (cases.empty())
        b.warn(warning_code::kTripleUnclassified, triple_string(t) + " matches none of cases I-V");
      else if (cases.size() > 1)
        b.warn(warning_code::kTripleAmbiguous, triple_string(t) + " matches several cases");
    }
    r["exceptional_triples"] = triples;
  });

  if (opts.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    r["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return r;
}

bool has_section_error(const json& report, const std::string& name) {
  for (const auto& e : report.at("errors"))
    if (e.at("section") == name) return true;
  return false;
}

std::vector<std::string> warning_codes(const json& report) {
  std::vector<std::string> out;
  for (const auto& w : report.at("warnings")) out.push_back(w.at("code").get<std::string>());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string plain(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string render_text(const json& r) {
  std::ostringstream os;
  auto row = [&](const std::string& key, const std::string& value) {
    os << std::left << std::setw(20) << key << value << '\n';
  };
  row("semigroup", plain(r["semigroup"]));
  row("genus", plain(r["genus"]));
  row("frobenius", plain(r["frobenius"]));
  row("alpha", plain(r["alpha"]));
  row("gaps", plain(r["gaps"]));
  row("eta", plain(r["eta"]));
  row("mu", plain(r["mu"]));
  if (r["flags"].is_object()) {
    std::string flags;
    for (const auto& [k, v] : r["flags"].items())
      if (v.get<bool>()) flags += (flags.empty() ? "" : " ") + k;
    row("flags", flags.empty() ? "-" : flags);
  }
  row("trigonal_shape", plain(r["trigonal_shape"]));
  row("eb_label", plain(r["eb_label"]));
  row("gonality", plain(r["gonality"]) + "  witness " + plain(r["gonality_witness"]));
  row("bpf_g13", plain(r["bpf_g13"]));
  row("clifford_index", plain(r["clifford_index"]) + "  witness " + plain(r["clifford_witness"]));
  row("is_cut_by_quadrics", plain(r["is_cut_by_quadrics"]));

  if (r["dim_In_formula"].is_array()) {
    os << "\n  n  formula  oracle\n";
    for (std::size_t i = 0; i < r["dim_In_formula"].size(); ++i)
      os << std::right << std::setw(3) << i + 2 << std::setw(9) << r["dim_In_formula"][i].get<long long>()
         << std::setw(8) << r["dim_In_oracle"][i].get<long long>() << '\n';
  }
  if (r["betti"].is_object()) {
    os << '\n';
    for (const auto& [k, v] : r["betti"].items()) row("betti " + k, plain(v));
  }
  auto list = [&](const char* title, const json& items) {
    if (!items.is_array() || items.empty()) return;
    os << '\n' << title << ":\n";
    for (const auto& it : items) os << "  " << plain(it) << '\n';
  };
  list("paper_generators", r["paper_generators"]);
  list("minimal_generators", r["minimal_generators"]);
  if (r["exceptional_triples"].is_array() && !r["exceptional_triples"].empty()) {
    os << "\nexceptional_triples:\n";
    for (const auto& t : r["exceptional_triples"])
      os << "  " << plain(t["triple"]) << "  cases " << plain(t["cases"]) << '\n';
  }
  if (!r["warnings"].empty()) {
    os << "\nwarnings:\n";
    for (const auto& w : r["warnings"]) os << "  " << plain(w["code"]) << ": " << plain(w["message"]) << '\n';
  }
  if (!r["errors"].empty()) {
    os << "\nerrors:\n";
    for (const auto& e : r["errors"])
      os << "  " << plain(e["section"]) << ": " << plain(e["kind"]) << " (" << plain(e["message"]) << ")\n";
  }
  if (r.contains("checks")) {
    os << "\nchecks:\n";
    for (const auto& c : r["checks"])
      os << "  " << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << plain(c["name"]) << '\n';
  }
  return os.str();
}

}  // namespace canonica
