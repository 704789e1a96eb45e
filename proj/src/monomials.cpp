#include "canonica/monomials.hpp"

#include <algorithm>
#include <limits>

#include "canonica/errors.hpp"

namespace canonica {

namespace {
constexpr int kSlotBits = 8;
constexpr int kMaxDegree = 64 / kSlotBits;
}  // namespace

std::uint64_t MonomialSpace::pack(std::span<const int> sorted_idx) {
  std::uint64_t key = 0;
  for (int v : sorted_idx) key = (key << kSlotBits) | static_cast<std::uint64_t>(v);
  return key;
}

std::vector<int> MonomialSpace::unpack(std::uint64_t key, int degree) {
  std::vector<int> out(degree);
  for (int j = degree - 1; j >= 0; --j) {
    out[j] = static_cast<int>(key & ((1u << kSlotBits) - 1));
    key >>= kSlotBits;
  }
  return out;
}

std::uint64_t MonomialSpace::count(int nvars, int degree) {
  if (degree == 0) return 1;
  if (nvars <= 0) return 0;
  // C(nvars+degree-1, degree) computed incrementally; each prefix is exact.
  unsigned __int128 c = 1;
  for (int i = 1; i <= degree; ++i) {
    c = c * static_cast<unsigned>(nvars - 1 + i) / static_cast<unsigned>(i);
    if (c > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

MonomialSpace::MonomialSpace(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw Error(ErrorKind::InvalidArgument, "monomial degree out of range");
  if (nvars < 1 || nvars >= (1 << kSlotBits))
    throw Error(ErrorKind::InvalidArgument, "too many variables for packed monomials");
  keys_.reserve(count(nvars, degree));

  // odometer over non-decreasing tuples; emitted in lex order
  std::vector<int> idx(degree, 0);
  while (true) {
    keys_.push_back(pack(idx));
    int j = degree - 1;
    while (j >= 0 && idx[j] == nvars - 1) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < degree; ++t) idx[t] = idx[j];
  }
}

std::size_t MonomialSpace::index_of_key(std::uint64_t key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key)
    throw Error(ErrorKind::InvalidArgument, "monomial not in this space");
  return static_cast<std::size_t>(it - keys_.begin());
}

std::size_t MonomialSpace::index_of(std::span<const int> idx) const {
  std::vector<int> sorted(idx.begin(), idx.end());
  std::sort(sorted.begin(), sorted.end());
  return index_of_key(pack(sorted));
}

}  // namespace canonica
