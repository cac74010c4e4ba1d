#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "permfact/exact.hpp"

namespace permfact {

inline constexpr int kDefaultMaxN = 20;

/// Integer partition stored as weakly decreasing positive parts.
///
/// Immutable value type. Comparison is lexicographic on the parts sequence,
/// which is the canonical order used to index every class vector and matrix:
/// for n = 4 this gives 1111 < 211 < 22 < 31 < 4.
class Partition {
 public:
  Partition() = default;

  /// Accepts parts in any order; zeros are dropped, negatives rejected.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0) throw std::invalid_argument("negative part in partition");
    std::erase(parts_, 0);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }
  static Partition row(int n) { return Partition({n}); }

  /// Parses "3,1,1" (any order, whitespace tolerated).
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(pos, end - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || value <= 0)
        throw std::invalid_argument("invalid partition literal: '" + std::string(text) + "'");
      parts.push_back(value);
      pos = end + 1;
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Row length with the convention λ_i = 0 past the last part (0-based).
  int part_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// k_i: number of parts equal to i.
  int multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
  }

  bool is_hook() const { return parts_.size() <= 1 || parts_[1] <= 1; }

  /// Parts joined by '+', e.g. "3+1"; "0" for the empty partition.
  std::string label() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += '+';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

/// All partitions of n in canonical order with O(1) rank lookup.
class PartitionIndex {
 public:
  PartitionIndex() = default;

  explicit PartitionIndex(int n, int max_n = kDefaultMaxN) : n_(n) {
    if (n < 1 || n > max_n)
      throw std::out_of_range("n = " + std::to_string(n) + " outside [1, " + std::to_string(max_n) + "]");
    std::vector<int> current;
    generate(n, n, current);
    std::sort(ordered_.begin(), ordered_.end());
    rank_.reserve(ordered_.size());
    for (std::size_t i = 0; i < ordered_.size(); ++i) rank_.emplace(ordered_[i], i);
  }

  int n() const { return n_; }
  std::size_t size() const { return ordered_.size(); }
  const Partition& operator[](std::size_t i) const { return ordered_[i]; }
  const std::vector<Partition>& partitions() const { return ordered_; }
  auto begin() const { return ordered_.begin(); }
  auto end() const { return ordered_.end(); }

  std::size_t rank(const Partition& p) const {
    auto it = rank_.find(p);
    if (it == rank_.end()) throw std::invalid_argument("partition " + p.label() + " not in P(" + std::to_string(n_) + ")");
    return it->second;
  }

 private:
  void generate(int remaining, int largest, std::vector<int>& current) {
    if (remaining == 0) {
      ordered_.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      generate(remaining - part, part, current);
      current.pop_back();
    }
  }

  int n_ = 0;
  std::vector<Partition> ordered_;
  std::unordered_map<Partition, std::size_t, PartitionHash> rank_;
};

inline PartitionIndex enumerate_partitions(int n, int max_n = kDefaultMaxN) {
  return PartitionIndex(n, max_n);
}

/// λ'_j = #{i : λ_i ≥ j}.
inline Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  if (lambda.length() == 0) return Partition();
  cols.reserve(static_cast<std::size_t>(lambda[0]));
  for (int j = 1; j <= lambda[0]; ++j) {
    int count = 0;
    for (int part : lambda.parts()) count += (part >= j);
    cols.push_back(count);
  }
  return Partition(std::move(cols));
}

inline bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

/// z_λ = ∏ i^{k_i} k_i!.
inline Int z_value(const Partition& lambda) {
  Int z = 1;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int k = static_cast<int>(j - i);
    z *= pow(Int(parts[i]), static_cast<unsigned>(k)) * factorial(k);
    i = j;
  }
  return z;
}

/// Number of permutations of cycle type λ, n!/z_λ.
inline Int class_size(const Partition& lambda) { return factorial(lambda.size()) / z_value(lambda); }

namespace detail {

// Row form: 2ρ = Σ λ_i (λ_i − 2i + 1), 1-based rows.
inline long long twice_rho_by_rows(const Partition& lambda) {
  long long twice = 0;
  for (int i = 0; i < lambda.length(); ++i) {
    const long long part = lambda[static_cast<std::size_t>(i)];
    twice += part * (part - 2LL * (i + 1) + 1);
  }
  return twice;
}

// Content form: Σ over cells of (column − row).
inline long long rho_by_contents(const Partition& lambda) {
  long long sum = 0;
  for (int row = 0; row < lambda.length(); ++row)
    for (int col = 0; col < lambda[static_cast<std::size_t>(row)]; ++col) sum += col - row;
  return sum;
}

}  // namespace detail

/// Eigenvalue ρ_λ of the transition matrix attached to λ (the content sum).
/// Both the row formula and the content formula are evaluated; they must agree.
inline Int rho(const Partition& lambda) {
  const long long twice = detail::twice_rho_by_rows(lambda);
  if (twice % 2 != 0) throw consistency_error("2*rho odd for " + lambda.label());
  const long long by_contents = detail::rho_by_contents(lambda);
  if (twice / 2 != by_contents)
    throw consistency_error("rho formulas disagree for " + lambda.label());
  return Int(by_contents);
}

/// Hook lengths, one per cell, rows top to bottom and columns left to right.
inline std::vector<int> hook_lengths(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (int row = 0; row < lambda.length(); ++row) {
    const int len = lambda[static_cast<std::size_t>(row)];
    for (int col = 0; col < len; ++col) {
      const int arm = len - col - 1;
      const int leg = conj[static_cast<std::size_t>(col)] - row - 1;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

struct ParityCensus {
  Int evens;
  Int odds;
  Int self_conjugates;
};

/// Counts partitions of n by parity of ℓ(λ) and the self-conjugate ones.
/// For n > 2 the even/odd difference equals the self-conjugate count in
/// absolute value; a violation throws.
inline ParityCensus partition_parity_census(int n, int max_n = kDefaultMaxN) {
  const PartitionIndex index(n, max_n);
  ParityCensus census;
  for (const auto& p : index) {
    if (p.length() % 2 == 0)
      ++census.evens;
    else
      ++census.odds;
    if (is_self_conjugate(p)) ++census.self_conjugates;
  }
  const Int diff = census.evens > census.odds ? census.evens - census.odds : census.odds - census.evens;
  if (n > 2 && diff != census.self_conjugates)
    throw consistency_error("|even - odd| != #self-conjugate for n = " + std::to_string(n));
  return census;
}

inline Int self_conjugate_count(int n, int max_n = kDefaultMaxN) {
  return partition_parity_census(n, max_n).self_conjugates;
}

}  // namespace permfact
