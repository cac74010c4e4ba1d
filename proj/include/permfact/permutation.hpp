#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permfact/partition.hpp"

namespace permfact {

/// Permutation of {0, ..., n-1} in one-line notation: image[x] = π(x).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
      if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a bijection");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
  }

  static Permutation transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.image_[static_cast<std::size_t>(a)], p.image_[static_cast<std::size_t>(b)]);
    return p;
  }

  /// Builds a permutation from disjoint cycles (0-based points).
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    for (const auto& cycle : cycles)
      for (std::size_t i = 0; i < cycle.size(); ++i)
        image[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    return Permutation(std::move(image));
  }

  /// Class representative: cycles of consecutive integers in descending part
  /// order, e.g. (3,1) -> (0 1 2)(3).
  static Permutation representative(const Partition& type) {
    std::vector<std::vector<int>> cycles;
    int next = 0;
    for (int part : type.parts()) {
      std::vector<int> cycle(static_cast<std::size_t>(part));
      std::iota(cycle.begin(), cycle.end(), next);
      next += part;
      cycles.push_back(std::move(cycle));
    }
    return from_cycles(type.size(), cycles);
  }

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& image() const { return image_; }

  /// (this ∘ rhs)(x) = this(rhs(x)).
  Permutation compose(const Permutation& rhs) const {
    std::vector<int> out(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x)
      out[x] = image_[static_cast<std::size_t>(rhs.image_[x])];
    Permutation p;
    p.image_ = std::move(out);
    return p;
  }

  /// (a b) ∘ this, without materializing the transposition.
  Permutation left_multiply_transposition(int a, int b) const {
    Permutation p = *this;
    for (int& v : p.image_) {
      if (v == a)
        v = b;
      else if (v == b)
        v = a;
    }
    return p;
  }

  int cycle_count() const {
    std::vector<bool> seen(image_.size(), false);
    int count = 0;
    for (std::size_t x = 0; x < image_.size(); ++x) {
      if (seen[x]) continue;
      ++count;
      for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(image_[y])) seen[y] = true;
    }
    return count;
  }

  /// True when a and b lie in the same cycle.
  bool same_cycle(int a, int b) const {
    int y = a;
    do {
      if (y == b) return true;
      y = image_[static_cast<std::size_t>(y)];
    } while (y != a);
    return false;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

inline Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  std::vector<int> lengths;
  for (int x = 0; x < p.degree(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    int len = 0;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = p(y)) {
      seen[static_cast<std::size_t>(y)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

/// All C(n,2) transpositions as point pairs (a < b), lexicographic.
inline std::vector<std::pair<int, int>> transposition_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return pairs;
}

}  // namespace permfact
