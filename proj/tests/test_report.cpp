#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "canonica/report.hpp"
#include "canonica/verification.hpp"

using namespace canonica;
using nlohmann::json;

namespace {
bool has_warning(const json& r, const std::string& code) {
  const auto codes = warning_codes(r);
  return std::find(codes.begin(), codes.end(), code) != codes.end();
}
}  // namespace

TEST_CASE("report: <3,7,11>") {
  const auto r = analyze(parse_semigroup("gens:3,7,11"), {3, false});
  CHECK(r["schema"] == 1);
  CHECK(r["semigroup"] == "gens:3,7,11");
  CHECK(r["genus"] == 5);
  CHECK(r["frobenius"] == 8);
  CHECK(r["eta"] == 1);
  CHECK(r["mu"] == 1);
  CHECK(r["flags"]["kunz"] == true);
  CHECK(r["eb_label"] == "KUNZ");
  CHECK(r["trigonal_shape"] == "SHAPE_III");
  CHECK(r["gonality"] == 3);
  CHECK(r["bpf_g13"] == true);
  CHECK(r["clifford_index"] == 1);
  CHECK(r["clifford_witness"] == json{{"delta", json::array()}, {"a_max", 3}});
  CHECK(r["dim_In_formula"] == json{3, 16});
  CHECK(r["dim_In_oracle"] == json{3, 16});
  CHECK(r["betti"]["0,2"] == 3);
  CHECK(r["betti"]["0,3"] == 3);
  CHECK(r["betti"]["1,3"] == 3);
  CHECK(r["is_cut_by_quadrics"] == false);
  CHECK(r["paper_generators"].size() == 5);
  CHECK(r["exceptional_triples"].size() == 3);
  CHECK(r["errors"].empty());
  CHECK_FALSE(r.contains("timing_ms"));

  CHECK(has_warning(r, warning_code::kQuadricRange));
  CHECK(has_warning(r, warning_code::kCubicConstant));
  CHECK(has_warning(r, warning_code::kListIncomplete));
  CHECK_FALSE(has_warning(r, warning_code::kFormulaOracle));
}

TEST_CASE("report: encodings give the same report") {
  CHECK(analyze(parse_semigroup("gens:3,7,11")) == analyze(parse_semigroup("gaps:1,2,4,5,8")));
}

TEST_CASE("report: labels and section errors") {
  CHECK(analyze(parse_semigroup("gens:4,5"))["eb_label"] == "PLANE_QUINTIC");
  CHECK(analyze(parse_semigroup("gens:3,7"))["eb_label"] == "TRIGONAL_GORENSTEIN");

  const auto h = analyze(parse_semigroup("gens:2,9"));
  CHECK(h["flags"]["hyperelliptic"] == true);
  CHECK(h["eb_label"] == "QUADRICS");
  CHECK(h["is_cut_by_quadrics"] == true);
  CHECK(h["dim_In_oracle"].is_null());
  CHECK(!h["errors"].empty());

  const auto nl = analyze(parse_semigroup("gens:3,8,10"));
  CHECK(nl["eb_label"].is_null());
  CHECK(has_section_error(nl, "eb_label"));

  const auto trivial = analyze(NumericalSemigroup());
  CHECK(trivial["genus"] == 0);
  CHECK(trivial["errors"][0]["kind"] == "TrivialSemigroup");
}

TEST_CASE("report: options") {
  const auto s = parse_semigroup("gens:3,7,11");
  const auto r = analyze(s, {5, true});
  CHECK(r["dim_In_oracle"].size() == 4);
  CHECK(r.contains("timing_ms"));
  CHECK_THROWS(analyze(s, {7, false}));
  CHECK_THROWS(analyze(s, {1, false}));
}

TEST_CASE("report: text rendering") {
  const auto text = render_text(analyze(parse_semigroup("gens:3,7,11")));
  CHECK(text.find("eb_label") != std::string::npos);
  CHECK(text.find("KUNZ") != std::string::npos);
  CHECK(text.find("X_1*X_5 - X_2*X_4") != std::string::npos);
}

TEST_CASE("report: deterministic") {
  for (const auto* t : {"gens:3,7,11", "gens:5,6,8", "gens:4,7,9"}) {
    const auto s = parse_semigroup(t);
    CHECK(analyze(s).dump() == analyze(s).dump());
  }
}

TEST_CASE("property checks: <3,7,11> passes everything") {
  for (const auto& c : property_checks(parse_semigroup("gens:3,7,11"))) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
  const auto f = family_check(4);
  CHECK(f.passed);
  CHECK(f.name == "family.clifford_index_eq_alpha-2");
}

TEST_CASE("genus checks") {
  for (int g = 0; g <= 6; ++g)
    for (const auto& c : genus_checks(g, enumerate_genus(g))) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
}
