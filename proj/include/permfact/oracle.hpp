#pragma once

// Ground truth with no character theory: walk the whole group S_n.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "permfact/exact.hpp"
#include "permfact/partition.hpp"
#include "permfact/permutation.hpp"
#include "permfact/report.hpp"

namespace permfact {

inline constexpr int kDefaultBruteMaxN = 7;

/// Counts of transposition words by group element: after k steps,
/// counts()[g] is the number of k-tuples of transpositions with product g.
class GroupWalk {
 public:
  explicit GroupWalk(int n, int max_n = kDefaultBruteMaxN) : n_(n) {
    if (n < 1 || n > max_n)
      throw std::out_of_range("group walk limited to 1 <= n <= " + std::to_string(max_n));
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    do {
      elements_.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));

    const auto pairs = transposition_pairs(n);
    neighbors_.resize(elements_.size());
    for (std::size_t g = 0; g < elements_.size(); ++g) {
      neighbors_[g].reserve(pairs.size());
      for (auto [a, b] : pairs) neighbors_[g].push_back(index_of(elements_[g].left_multiply_transposition(a, b)));
    }
    counts_.assign(elements_.size(), Int(0));
    counts_[0] = 1;  // identity is first in lexicographic order
  }

  int n() const { return n_; }
  int steps() const { return steps_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Int>& counts() const { return counts_; }

  /// Lexicographic rank of a permutation (Lehmer code).
  std::size_t index_of(const Permutation& p) const {
    std::size_t rank = 0;
    const auto& img = p.image();
    for (std::size_t i = 0; i < img.size(); ++i) {
      std::size_t smaller = 0;
      for (std::size_t j = i + 1; j < img.size(); ++j) smaller += img[j] < img[i];
      rank = rank * (img.size() - i) + smaller;
    }
    return rank;
  }

  /// Multiplies on the left by the sum of all transpositions.
  void step() {
    std::vector<Int> next(counts_.size(), Int(0));
    for (std::size_t g = 0; g < counts_.size(); ++g) {
      if (counts_[g] == 0) continue;
      for (std::size_t h : neighbors_[g]) next[h] += counts_[g];
    }
    counts_ = std::move(next);
    ++steps_;
  }

  void advance_to(int k) {
    if (k < steps_) throw std::invalid_argument("group walk cannot rewind");
    while (steps_ < k) step();
  }

  const Int& count_at(const Permutation& p) const { return counts_[index_of(p)]; }

  Int total_mass() const {
    Int sum = 0;
    for (const auto& c : counts_) sum += c;
    return sum;
  }

 private:
  int n_;
  int steps_ = 0;
  std::vector<Permutation> elements_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<Int> counts_;
};

/// c_k(μ) read at the standard representative of μ after k walk steps.
inline Int count_brute(const Partition& mu, int k, int max_n = kDefaultBruteMaxN) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  GroupWalk walk(mu.size(), max_n);
  walk.advance_to(k);
  return walk.count_at(Permutation::representative(mu));
}

/// table[k][r] = c_k of the r-th partition of n, for k = 0..k_max.
inline std::vector<std::vector<Int>> brute_class_counts(int n, int k_max, int max_n = kDefaultBruteMaxN) {
  GroupWalk walk(n, max_n);
  const PartitionIndex index(n);
  std::vector<std::size_t> reps;
  for (const auto& p : index) reps.push_back(walk.index_of(Permutation::representative(p)));
  std::vector<std::vector<Int>> table;
  for (int k = 0; k <= k_max; ++k) {
    walk.advance_to(k);
    auto& row = table.emplace_back();
    for (std::size_t r : reps) row.push_back(walk.counts()[r]);
  }
  return table;
}

/// Literal enumeration of all C(n,2)^k tuples; only for tiny cases.
inline Int count_tuples(const Partition& mu, int k) {
  const int n = mu.size();
  const auto pairs = transposition_pairs(n);
  const Int tuples = pow(Int(pairs.size()), static_cast<unsigned>(k));
  if (tuples > 5'000'000) throw std::out_of_range("tuple enumeration too large");
  const Permutation target = Permutation::representative(mu);
  Int hits = 0;
  std::vector<std::size_t> digits(static_cast<std::size_t>(k), 0);
  while (true) {
    Permutation product = Permutation::identity(n);
    for (std::size_t d : digits) product = product.left_multiply_transposition(pairs[d].first, pairs[d].second);
    if (product == target) ++hits;
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == pairs.size()) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return hits;
}

/// Multiplying by (i j) cuts a cycle when i, j share it and glues two cycles
/// otherwise; checked over every element and transposition.
inline CheckReport verify_cut_glue(int n, int max_n = 8) {
  if (n < 1 || n > max_n) throw std::out_of_range("cut/glue check limited to n <= " + std::to_string(max_n));
  CheckReport report;
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  const auto pairs = transposition_pairs(n);
  do {
    const Permutation alpha(image);
    const int cycles = alpha.cycle_count();
    for (auto [a, b] : pairs) {
      const int after = alpha.left_multiply_transposition(a, b).cycle_count();
      const int expected = alpha.same_cycle(a, b) ? cycles + 1 : cycles - 1;
      if (after != expected) {
        std::string where;
        for (int v : image) where += std::to_string(v);
        report.fail("alpha = [" + where + "], tau = (" + std::to_string(a) + " " + std::to_string(b) + ")");
      }
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return report;
}

/// Per-element factorization counts are constant on conjugacy classes.
inline CheckReport verify_class_invariance(int n, int k, int max_n = 6) {
  if (n > max_n || k > max_n) throw std::out_of_range("class invariance check limited to n, k <= 6");
  CheckReport report;
  GroupWalk walk(n, max_n);
  walk.advance_to(k);
  const PartitionIndex index(n);
  std::vector<Int> first(index.size());
  std::vector<bool> seen(index.size(), false);
  for (std::size_t g = 0; g < walk.elements().size(); ++g) {
    const std::size_t cls = index.rank(cycle_type(walk.elements()[g]));
    if (!seen[cls]) {
      seen[cls] = true;
      first[cls] = walk.counts()[g];
    } else if (walk.counts()[g] != first[cls]) {
      report.fail("class " + index[cls].label() + ": " + to_decimal(walk.counts()[g]) + " vs " + to_decimal(first[cls]));
    }
  }
  return report;
}

}  // namespace permfact
