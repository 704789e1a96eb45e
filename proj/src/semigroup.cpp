#include "canonica/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "canonica/errors.hpp"

namespace canonica {

NumericalSemigroup::NumericalSemigroup() : member_{1} {}

NumericalSemigroup::NumericalSemigroup(std::vector<int> gaps)
    : gaps_(std::move(gaps)) {
  if (gaps_.empty()) {
    member_ = {1};
    return;
  }
  frobenius_ = gaps_.back();
  alpha_ = 1;
  while (std::binary_search(gaps_.begin(), gaps_.end(), alpha_)) ++alpha_;

  member_.assign(frobenius_ + alpha_ + 1, 1);
  for (int l : gaps_) member_[l] = 0;

  // tau: the first tau nonzero elements are alpha, 2 alpha, ..., tau alpha.
  int idx = 0;
  for (int x = 1;; ++x) {
    if (!contains(x)) continue;
    ++idx;
    if (x != idx * alpha_) break;
    tau_ = idx;
  }

  // m: largest m with [gamma - m alpha + 1, gamma - 1 - (m - 1) alpha] in S.
  auto block_in_s = [&](int m) {
    for (int x = frobenius_ - m * alpha_ + 1; x <= frobenius_ - 1 - (m - 1) * alpha_; ++x)
      if (!contains(x)) return false;
    return true;
  };
  while (block_in_s(m_ + 1)) ++m_;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> gens) {
  if (gens.empty()) throw Error(ErrorKind::EmptyInput, "no generators given");
  int g = 0;
  for (int x : gens) {
    if (x <= 0)
      throw Error(ErrorKind::InvalidArgument,
                  "generators must be positive, got " + std::to_string(x));
    g = std::gcd(g, x);
  }
  if (g != 1)
    throw Error(ErrorKind::NonCoprimeGenerators,
                "gcd of generators is " + std::to_string(g) + ", not 1");

  const int smallest = *std::min_element(gens.begin(), gens.end());
  // Sieve until `smallest` consecutive members appear; everything after is in S.
  std::vector<unsigned char> in_s{1};
  std::vector<int> gaps;
  int run = 0;
  for (int x = 1; run < smallest; ++x) {
    bool member = false;
    for (int gen : gens)
      if (gen <= x && in_s[x - gen]) {
        member = true;
        break;
      }
    in_s.push_back(member);
    if (member) {
      ++run;
    } else {
      run = 0;
      gaps.push_back(x);
    }
  }
  return NumericalSemigroup(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const int> gaps_in) {
  std::vector<int> gaps(gaps_in.begin(), gaps_in.end());
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  if (gaps.empty()) return NumericalSemigroup();
  if (gaps.front() <= 0)
    throw Error(ErrorKind::NotAGapSet, "gaps must be positive integers");

  const int gamma = gaps.back();
  std::vector<unsigned char> gap(gamma + 1, 0);
  for (int l : gaps) gap[l] = 1;
  for (int a = 1; a <= gamma; ++a) {
    if (gap[a]) continue;
    for (int b = a; a + b <= gamma; ++b) {
      if (!gap[b] && gap[a + b])
        throw Error(ErrorKind::NotAGapSet,
                    "complement not closed: " + std::to_string(a) + " + " +
                        std::to_string(b) + " = " + std::to_string(a + b) +
                        " is listed as a gap");
    }
  }
  return NumericalSemigroup(std::move(gaps));
}

std::vector<int> NumericalSemigroup::elements_up_to(int bound) const {
  std::vector<int> out;
  for (int x = 0; x <= bound; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::vector<int> NumericalSemigroup::minimal_generators() const {
  if (is_trivial()) return {1};
  std::vector<int> gens;
  const int limit = frobenius_ + alpha_;
  for (int x = 1; x <= limit; ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (int y = alpha_; y <= x - y; ++y)
      if (contains(y) && contains(x - y)) {
        decomposable = true;
        break;
      }
    if (!decomposable) gens.push_back(x);
  }
  return gens;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> parse_int_list(std::string_view body) {
  std::vector<int> out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    std::string_view tok = body.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::ParseError,
                  "bad integer '" + std::string(tok) + "' in semigroup list");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

}  // namespace

NumericalSemigroup parse_semigroup(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::ParseError,
                "expected 'gens:a,b,...' or 'gaps:a,b,...', got '" +
                    std::string(text) + "'");
  const std::string_view tag = text.substr(0, colon);
  const auto values = parse_int_list(text.substr(colon + 1));
  if (tag == "gens") return NumericalSemigroup::from_generators(values);
  if (tag == "gaps") return NumericalSemigroup::from_gaps(values);
  throw Error(ErrorKind::ParseError, "unknown encoding '" + std::string(tag) + "'");
}

std::string render(const NumericalSemigroup& s, Encoding encoding) {
  if (encoding == Encoding::Gaps) return "gaps:" + join(s.gaps());
  return "gens:" + join(s.minimal_generators());
}

// ---------------------------------------------------------------------------

int max_genus() {
  if (const char* env = std::getenv("CANONICA_MAX_GENUS")) {
    int v = 0;
    std::string_view sv(env);
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec == std::errc{} && ptr == sv.data() + sv.size() && v >= 0) return v;
  }
  return 12;
}

std::vector<NumericalSemigroup> enumerate_genus(int g) {
  return enumerate_genus(g, max_genus());
}

std::vector<NumericalSemigroup> enumerate_genus(int g, int bound) {
  if (g < 0) throw Error(ErrorKind::InvalidArgument, "genus must be non-negative");
  if (g > bound)
    throw Error(ErrorKind::BoundExceeded, "genus " + std::to_string(g) +
                                              " exceeds the configured cap " +
                                              std::to_string(bound));
  std::vector<std::vector<int>> level{{}};
  for (int depth = 0; depth < g; ++depth) {
    std::vector<std::vector<int>> next;
    for (const auto& gaps : level) {
      const NumericalSemigroup s(gaps);
      for (int x : s.minimal_generators()) {
        if (x <= s.frobenius()) continue;
        auto child = gaps;
        child.push_back(x);  // x > gamma keeps the list sorted
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  std::vector<NumericalSemigroup> out;
  out.reserve(level.size());
  for (auto& gaps : level) out.push_back(NumericalSemigroup(std::move(gaps)));
  return out;
}

// ---------------------------------------------------------------------------

bool KappaSet::contains(int a) const {
  if (a >= tail_start) return true;
  return std::binary_search(below.begin(), below.end(), a);
}

KappaSet kappa_set(const NumericalSemigroup& s) {
  if (s.is_trivial())
    throw Error(ErrorKind::TrivialSemigroup, "K is undefined for S = N");
  const int gamma = s.frobenius();
  KappaSet k;
  k.tail_start = gamma + 1;
  for (int a = 0; a <= gamma; ++a)
    if (!s.contains(gamma - a)) k.below.push_back(a);
  return k;
}

std::vector<int> semigroup_closure(std::span<const int> a, int bound) {
  if (bound < 0) throw Error(ErrorKind::InvalidArgument, "negative bound");
  std::vector<unsigned char> in_a(bound + 1, 0);
  for (int x : a) {
    if (x < 0 || x > bound)
      throw Error(ErrorKind::InvalidArgument,
                  "element " + std::to_string(x) + " outside [0, bound]");
    in_a[x] = 1;
  }
  if (!in_a[0]) throw Error(ErrorKind::InvalidArgument, "closure input must contain 0");

  std::vector<int> steps;
  for (int x = 1; x <= bound; ++x)
    if (in_a[x]) steps.push_back(x);
  std::vector<unsigned char> reach(bound + 1, 0);
  reach[0] = 1;
  for (int x = 1; x <= bound; ++x)
    for (int step : steps) {
      if (step > x) break;
      if (reach[x - step]) {
        reach[x] = 1;
        break;
      }
    }
  std::vector<int> out;
  for (int x = 0; x <= bound; ++x)
    if (reach[x]) out.push_back(x);
  return out;
}

std::vector<int> set_difference(const std::function<bool(int)>& in_i,
                                std::span<const int> j, int lo, int hi) {
  std::vector<int> out;
  for (int a = lo; a <= hi; ++a) {
    if (std::all_of(j.begin(), j.end(), [&](int x) { return in_i(a + x); }))
      out.push_back(a);
  }
  return out;
}

bool is_symmetric(const NumericalSemigroup& s) {
  if (s.is_trivial()) throw Error(ErrorKind::TrivialSemigroup, "S = N");
  const int gamma = s.frobenius();
  return std::all_of(s.gaps().begin(), s.gaps().end(),
                     [&](int l) { return s.contains(gamma - l); });
}

bool is_pseudo_symmetric(const NumericalSemigroup& s) {
  if (s.is_trivial()) throw Error(ErrorKind::TrivialSemigroup, "S = N");
  const int gamma = s.frobenius();
  if (gamma % 2 != 0 || !s.is_gap(gamma / 2)) return false;
  return std::all_of(s.gaps().begin(), s.gaps().end(), [&](int l) {
    return l == gamma / 2 || s.contains(gamma - l);
  });
}

bool is_ordinary(const NumericalSemigroup& s) {
  return !s.is_trivial() && s.multiplicity() == s.conductor();
}

}  // namespace canonica
