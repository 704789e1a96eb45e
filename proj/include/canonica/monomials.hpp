#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace canonica {

/// All degree-n monomials in `nvars` variables, as non-decreasing index
/// tuples in lexicographic order. A tuple is packed big-endian into a
/// uint64 (8 bits per slot), so packed order is lex order and lookup is a
/// binary search. Supports nvars <= 255 and n <= 8.
class MonomialSpace {
 public:
  MonomialSpace(int nvars, int degree);

  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return keys_.size(); }

  std::uint64_t key(std::size_t i) const { return keys_[i]; }
  std::vector<int> indices(std::size_t i) const { return unpack(keys_[i], degree_); }

  /// Position of the (not necessarily sorted) tuple `idx`.
  std::size_t index_of(std::span<const int> idx) const;
  std::size_t index_of_key(std::uint64_t key) const;

  static std::uint64_t pack(std::span<const int> sorted_idx);
  static std::vector<int> unpack(std::uint64_t key, int degree);

  /// Number of degree-n monomials in nvars variables, C(nvars+n-1, n),
  /// saturating at UINT64_MAX.
  static std::uint64_t count(int nvars, int degree);

 private:
  int nvars_;
  int degree_;
  std::vector<std::uint64_t> keys_;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// True when x and y were in different classes.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace canonica
