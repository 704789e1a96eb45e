#include <omp.h>

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <string>

#include "canonica/brill_noether.hpp"
#include "canonica/errors.hpp"
#include "canonica/ideal_synthesis.hpp"
#include "canonica/kernels.hpp"
#include "canonica/report.hpp"
#include "canonica/verification.hpp"

using namespace canonica;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kAssertFailed = 1, kUsage = 2, kDomain = 3 };

struct Common {
  bool json_out = false;
  int degree = 3;
  int threads = 0;
  bool strict = false;
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_degree = true) {
  cmd->add_flag("--json", c.json_out, "emit JSON");
  if (with_degree) cmd->add_option("--degree", c.degree, "top degree for dim I_n and Betti data")->check(CLI::Range(2, 6));
  cmd->add_option("--threads", c.threads, "worker threads (default: all)")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--strict-paper", c.strict, "discrepancy warnings and unclassified triples fail the run");
  cmd->add_flag("--timing", c.timing, "add timing_ms to reports");
}

bool is_discrepancy(const std::string& code) {
  return code.rfind("DISCREPANCY_", 0) == 0 || code.rfind("TRIPLE_", 0) == 0;
}

int strict_status(const json& report, bool strict) {
  if (!strict) return kOk;
  for (const auto& code : warning_codes(report))
    if (is_discrepancy(code)) return kAssertFailed;
  return kOk;
}

void print_report(const json& r, bool as_json) {
  if (as_json)
    std::cout << r.dump(2) << '\n';
  else
    std::cout << render_text(r);
}

json error_json(const Error& e) {
  return {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    json j = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.strict_only) j["strict_only"] = true;
    out.push_back(j);
  }
  return out;
}

bool gating_failure(const std::vector<Check>& checks, bool strict) {
  for (const auto& c : checks)
    if (!c.passed && (strict || !c.strict_only)) return true;
  return false;
}

// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& text, const Common& c) {
  const auto s = parse_semigroup(text);
  const auto r = analyze(s, {c.degree, c.timing});
  print_report(r, c.json_out);
  if (s.is_trivial() || s.genus() <= 2) return kDomain;
  return strict_status(r, c.strict);
}

struct ScanOptions {
  Common common;
  bool assert_props = false;
  std::string filter;
  int check_degree = 5;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int g = std::stoi(text);
      return {g, g};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "expected a genus range lo..hi, got '" + text + "'");
  }
}

bool passes_filter(const json& r, const std::string& filter) {
  if (filter.empty()) return true;
  if (r["flags"].is_object() && r["flags"].contains(filter)) return r["flags"][filter].get<bool>();
  if (filter == "trigonal") return r["gonality"] == 3;
  if (filter == "linearly_normal")
    return r["flags"].is_object() && (r["flags"]["gorenstein"].get<bool>() || r["flags"]["nearly_gorenstein"].get<bool>());
  return r["eb_label"].is_string() && r["eb_label"] == filter;
}

struct ScanResult {
  json doc;
  bool failed = false;
};

ScanResult run_scan(int lo, int hi, const ScanOptions& o) {
  if (lo < 0 || hi < lo) throw Error(ErrorKind::InvalidArgument, "empty genus range");
  if (hi > max_genus())
    throw Error(ErrorKind::BoundExceeded, "genus " + std::to_string(hi) + " exceeds the cap " +
                                              std::to_string(max_genus()) + " (set CANONICA_MAX_GENUS)");
  ScanResult out;
  json reports = json::array();
  json genus_level = json::array();
  std::map<std::string, int> labels, warnings;
  int checks_run = 0, checks_failed = 0;

  for (int g = lo; g <= hi; ++g) {
    const auto all = enumerate_genus(g);
    std::vector<json> slot(all.size());
    std::vector<std::vector<Check>> checks(all.size());
    parallel_for(all.size(), o.common.threads, [&](std::size_t i) {
      slot[i] = analyze(all[i], {o.common.degree, o.common.timing});
      if (o.assert_props) checks[i] = property_checks(all[i], {o.check_degree, true});
    });
    if (o.assert_props) {
      const auto gc = genus_checks(g, all);
      checks_run += static_cast<int>(gc.size());
      for (const auto& c : gc) checks_failed += !c.passed;
      out.failed = out.failed || gating_failure(gc, o.common.strict);
      genus_level.push_back({{"genus", g}, {"checks", checks_json(gc)}});
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      json& r = slot[i];
      if (!passes_filter(r, o.filter)) continue;
      if (o.assert_props) {
        r["checks"] = checks_json(checks[i]);
        checks_run += static_cast<int>(checks[i].size());
        for (const auto& c : checks[i]) checks_failed += !c.passed;
        out.failed = out.failed || gating_failure(checks[i], o.common.strict);
      }
      if (strict_status(r, o.common.strict) != kOk) out.failed = true;
      ++labels[r["eb_label"].is_string() ? r["eb_label"].get<std::string>() : std::string("none")];
      for (const auto& code : warning_codes(r)) ++warnings[code];
      reports.push_back(std::move(r));
    }
  }
  json summary = {{"count", reports.size()}, {"eb_label", labels}, {"warnings", warnings}};
  if (o.assert_props) {
    summary["checks_run"] = checks_run;
    summary["checks_failed"] = checks_failed;
  }
  out.doc = {{"schema", 1}, {"genus_range", {lo, hi}}, {"reports", reports}, {"summary", summary}};
  if (o.assert_props) out.doc["genus_checks"] = genus_level;
  return out;
}

void print_scan_text(const json& doc) {
  for (const auto& r : doc["reports"]) {
    auto field = [&](const char* key) { return r[key].is_null() ? std::string("-") : r[key].dump(); };
    std::string label = r["eb_label"].is_string() ? r["eb_label"].get<std::string>() : "-";
    std::cout << std::left << std::setw(28) << r["semigroup"].get<std::string>() << " g=" << std::setw(3)
              << r["genus"].get<int>() << " label=" << std::setw(20) << label << " gon=" << std::setw(3)
              << field("gonality") << " cliff=" << std::setw(3) << field("clifford_index")
              << " b13=" << (r["betti"].is_object() ? r["betti"]["1,3"].dump() : "-");
    if (!r["warnings"].empty()) std::cout << " warnings=" << r["warnings"].size();
    if (r.contains("checks")) {
      int failed = 0;
      for (const auto& c : r["checks"]) failed += !c["passed"].get<bool>();
      std::cout << " checks_failed=" << failed;
      for (const auto& c : r["checks"])
        if (!c["passed"].get<bool>()) std::cout << "\n    FAIL " << c["name"].get<std::string>() << ": " << c.value("detail", "");
    }
    std::cout << '\n';
  }
  if (doc.contains("genus_checks"))
    for (const auto& gl : doc["genus_checks"])
      for (const auto& c : gl["checks"])
        if (!c["passed"].get<bool>())
          std::cout << "FAIL genus " << gl["genus"] << " " << c["name"].get<std::string>() << '\n';
  std::cout << "summary: " << doc["summary"].dump() << '\n';
}

int cmd_scan(const std::string& range, const ScanOptions& o) {
  const auto [lo, hi] = parse_range(range);
  const auto result = run_scan(lo, hi, o);
  if (o.common.json_out)
    std::cout << result.doc.dump(2) << '\n';
  else
    print_scan_text(result.doc);
  return result.failed ? kAssertFailed : kOk;
}

int cmd_family(int alpha, const Common& c) {
  const auto member = kunz_family(alpha);
  auto r = analyze(member.semigroup, {c.degree, c.timing});
  if (member.note)
    r["warnings"].push_back({{"code", warning_code::kFamilyMember}, {"message", *member.note}});
  const auto check = family_check(alpha);
  r["checks"] = checks_json({check});
  print_report(r, c.json_out);
  if (!check.passed) return kAssertFailed;
  return strict_status(r, c.strict);
}

int cmd_ideal(const std::string& text, bool minimal, const Common& c) {
  const auto s = parse_semigroup(text);
  std::vector<IdealGenerator> gens;
  if (minimal) {
    for (auto& f : minimal_generators(s, c.degree).gens) gens.push_back(std::move(f));
  } else {
    gens = paper_generators(s);
  }
  if (c.json_out) {
    json out = json::array();
    for (const auto& f : gens) out.push_back({{"generator", f.to_string()}, {"origin", std::string(to_string(f.origin))}});
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& f : gens) std::cout << f.to_string() << '\n';
  }
  return kOk;
}

int cmd_verify(const Common& c) {
  // the acceptance ranges: scan genus 3..9 with every property gate,
  // exceptional triples through genus 10, the family for alpha = 3..8
  bool failed = false;
  json suites = json::array();
  auto record = [&](const std::string& name, bool ok, const std::string& detail, bool strict_only = false) {
    const bool gating = !ok && (c.strict || !strict_only);
    failed = failed || gating;
    suites.push_back({{"suite", name}, {"passed", ok}, {"detail", detail}, {"gating", !strict_only || c.strict}});
    if (!c.json_out) std::cout << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : "  " + detail) << '\n';
  };

  ScanOptions o;
  o.common = c;
  o.common.strict = false;
  o.assert_props = true;
  const auto scan = run_scan(3, 9, o);

  std::map<std::string, std::pair<int, int>> by_check;  // name -> (run, failed)
  for (const auto& r : scan.doc["reports"])
    for (const auto& ch : r["checks"]) {
      auto& slot = by_check[ch["name"].get<std::string>()];
      ++slot.first;
      slot.second += !ch["passed"].get<bool>();
    }
  for (const auto& gl : scan.doc["genus_checks"])
    for (const auto& ch : gl["checks"]) {
      auto& slot = by_check[ch["name"].get<std::string>()];
      ++slot.first;
      slot.second += !ch["passed"].get<bool>();
    }
  for (const auto& [name, counts] : by_check) {
    const bool strict_only = name == "ideal.exceptional_triples_classified";
    record("scan 3..9 " + name, counts.second == 0,
           std::to_string(counts.first - counts.second) + "/" + std::to_string(counts.first), strict_only);
  }

  int triples_bad = 0, triples_total = 0;
  for (const auto& s : enumerate_genus(10)) {
    for (const auto& t : exceptional_triples(s)) {
      ++triples_total;
      triples_bad += classify_triple(s, t).size() != 1;
    }
  }
  record("genus 10 exceptional triples classified", triples_bad == 0,
         std::to_string(triples_total - triples_bad) + "/" + std::to_string(triples_total), true);

  for (int alpha = 3; alpha <= 8; ++alpha) {
    const auto check = family_check(alpha);
    record("family " + std::to_string(alpha) + " " + check.name, check.passed, check.detail);
  }
  if (c.json_out) std::cout << json{{"schema", 1}, {"suites", suites}, {"passed", !failed}}.dump(2) << '\n';
  return failed ? kAssertFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonica: canonical ideals, Betti data and Clifford index of monomial cusps"};
  app.require_subcommand(1);

  Common common;
  std::string input, range;
  int alpha = 0;
  bool minimal = false;
  ScanOptions scan_opts;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one semigroup");
  analyze_cmd->add_option("semigroup", input, "gens:a,b,... or gaps:a,b,...")->required();
  add_common(analyze_cmd, common);

  auto* scan_cmd = app.add_subcommand("scan", "report every semigroup in a genus range");
  scan_cmd->add_option("range", range, "lo..hi")->required();
  add_common(scan_cmd, common);
  scan_cmd->add_flag("--assert", scan_opts.assert_props, "run every property check; exit 1 on failure");
  scan_cmd->add_option("--filter", scan_opts.filter,
                       "keep reports with this flag (gorenstein, nearly_gorenstein, kunz, hyperelliptic, "
                       "trigonal, linearly_normal) or EB label");

  auto* family_cmd = app.add_subcommand("family", "Kunz family member of multiplicity alpha");
  family_cmd->add_option("alpha", alpha, "multiplicity >= 3")->required();
  add_common(family_cmd, common);

  auto* ideal_cmd = app.add_subcommand("ideal", "print binomial generators, one per line");
  ideal_cmd->add_option("semigroup", input, "gens:a,b,... or gaps:a,b,...")->required();
  ideal_cmd->add_flag("--minimal", minimal, "oracle minimal generators up to --degree instead of the listed ones");
  add_common(ideal_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "scan --assert over the acceptance ranges");
  add_common(verify_cmd, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (common.threads > 0) omp_set_num_threads(common.threads);

  try {
    if (*analyze_cmd) return cmd_analyze(input, common);
    if (*scan_cmd) {
      scan_opts.common = common;
      return cmd_scan(range, scan_opts);
    }
    if (*family_cmd) return cmd_family(alpha, common);
    if (*ideal_cmd) return cmd_ideal(input, minimal, common);
    if (*verify_cmd) return cmd_verify(common);
  } catch (const Error& e) {
    if (common.json_out)
      std::cout << error_json(e).dump(2) << '\n';
    std::cerr << "canonica: " << to_string(e.kind()) << ": " << e.what() << '\n';
    if (e.kind() == ErrorKind::InvariantViolation) return kAssertFailed;
    return is_usage_error(e.kind()) ? kUsage : kDomain;
  }
  return kUsage;
}
