#include "canonica/canonical_model.hpp"

#include <algorithm>
#include <sstream>

#include "canonica/classification.hpp"
#include "canonica/errors.hpp"
#include "canonica/kernels.hpp"
#include "canonica/monomials.hpp"

namespace canonica {

CanonicalChart::CanonicalChart(const NumericalSemigroup& s)
    : variables(s.gaps()), gamma(s.frobenius()) {
  if (s.is_trivial()) throw Error(ErrorKind::TrivialSemigroup, "no gaps, no chart");
}

std::vector<int> CanonicalChart::exponents() const {
  std::vector<int> e;
  e.reserve(variables.size());
  for (int l : variables) e.push_back(gamma - l);
  return e;
}

int CanonicalChart::label_index(int label) const {
  auto it = std::lower_bound(variables.begin(), variables.end(), label);
  if (it == variables.end() || *it != label)
    throw Error(ErrorKind::InvalidArgument, "X_" + std::to_string(label) + " is not a variable");
  return static_cast<int>(it - variables.begin());
}

int GradedMonomial::value(const CanonicalChart& chart) const {
  int v = 0;
  for (int l : labels) v += chart.exponent_of(l);
  return v;
}

std::string GradedMonomial::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "*" : "") << "X_" << labels[i];
  return os.str();
}

// ---------------------------------------------------------------------------

Sumset gamma_sumset(const NumericalSemigroup& s, int n) {
  if (s.is_trivial()) throw Error(ErrorKind::TrivialSemigroup, "no gaps");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "sumset degree must be >= 1");
  const int gamma = s.frobenius();
  std::vector<int> base;
  for (int l : s.gaps()) base.push_back(gamma - l);

  std::vector<unsigned char> prev(1, 1);  // Gamma_0 = {0}
  std::vector<unsigned char> cur;
  std::vector<unsigned char> before_last;
  for (int k = 1; k <= n; ++k) {
    cur.assign(k * std::max(gamma - 1, 0) + 1, 0);
    for (std::size_t v = 0; v < prev.size(); ++v) {
      if (!prev[v]) continue;
      for (int b : base) cur[v + b] = 1;
    }
    before_last = std::move(prev);
    prev = cur;
  }

  Sumset out;
  for (std::size_t v = 0; v < cur.size(); ++v)
    if (cur[v]) out.gamma_n.push_back(static_cast<int>(v));
  if (n >= 2) {
    for (int v = 0; v <= gamma - 1 && v < static_cast<int>(cur.size()); ++v) {
      const bool in_prev = v < static_cast<int>(before_last.size()) && before_last[v];
      if (cur[v] && !in_prev) out.a_n.push_back(v);
    }
  }
  return out;
}

int sigma_n(const NumericalSemigroup& s, int n) {
  if (is_symmetric(s)) return 0;
  const auto sum = gamma_sumset(s, n);
  const int gamma = s.frobenius();
  const auto upto = std::upper_bound(sum.gamma_n.begin(), sum.gamma_n.end(), gamma);
  return static_cast<int>(upto - sum.gamma_n.begin()) - s.genus();
}

namespace {

void require_canonical(const NumericalSemigroup& s, int n) {
  if (s.is_trivial()) throw Error(ErrorKind::TrivialSemigroup, "no gaps");
  if (s.genus() < 3)
    throw Error(ErrorKind::GenusTooSmall, "genus " + std::to_string(s.genus()) + " is below 3");
  if (s.contains(2))
    throw Error(ErrorKind::Hyperelliptic, "2 is in S; the canonical map is not an embedding");
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "degree must be >= 2");
}

std::int64_t binom(int nvars, int n) {
  return static_cast<std::int64_t>(MonomialSpace::count(nvars, n));
}

}  // namespace

std::int64_t h0_omega_n_closed(const NumericalSemigroup& s, int n) {
  const CurveClass c = classify(s);
  const std::int64_t g = s.genus();
  return n * (2 * g - 2) - (n - 1) * c.eta + sigma_n(s, n) + 1 - g;
}

std::int64_t h0_omega_n(const NumericalSemigroup& s, int n) {
  require_canonical(s, n);
  const int gamma = s.frobenius();
  const auto sum = gamma_sumset(s, n);
  std::int64_t blocks;
  if (is_symmetric(s)) {
    blocks = static_cast<std::int64_t>(sum.gamma_n.size());
  } else {
    const auto below =
        std::lower_bound(sum.gamma_n.begin(), sum.gamma_n.end(), gamma) - sum.gamma_n.begin();
    blocks = below + static_cast<std::int64_t>(n - 1) * gamma - n + 1;
  }
  const std::int64_t closed = h0_omega_n_closed(s, n);
  if (blocks != closed)
    throw Error(ErrorKind::InvariantViolation,
                "h0(omega^" + std::to_string(n) + "): block count " + std::to_string(blocks) +
                    " != closed form " + std::to_string(closed));
  return blocks;
}

std::int64_t dim_ideal_formula(const NumericalSemigroup& s, int n) {
  require_canonical(s, n);
  const CurveClass c = classify(s);
  const std::int64_t g = s.genus();
  return binom(s.genus(), n) - n * (2 * g - 2) + (n - 1) * c.eta - sigma_n(s, n) - 1 + g;
}

std::uint64_t monomial_cap() { return 5'000'000; }

void check_monomial_budget(const NumericalSemigroup& s, int n) {
  const auto count = MonomialSpace::count(s.genus(), n);
  if (count > monomial_cap())
    throw Error(ErrorKind::CombinatorialBlowup,
                std::to_string(count) + " monomials of degree " + std::to_string(n) +
                    " exceed the cap " + std::to_string(monomial_cap()));
}

std::int64_t dim_ideal_oracle(const NumericalSemigroup& s, int n, bool parallel) {
  require_canonical(s, n);
  check_monomial_budget(s, n);
  const CanonicalChart chart(s);
  const auto exps = chart.exponents();
  const auto hit = parallel ? monomial_value_table_parallel(exps, n)
                            : monomial_value_table_serial(exps, n);
  const auto distinct = std::count(hit.begin(), hit.end(), 1);
  return binom(s.genus(), n) - distinct;
}

}  // namespace canonica
