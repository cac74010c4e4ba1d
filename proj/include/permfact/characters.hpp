#pragma once

// Irreducible characters χ^λ(μ) of S_n, computed combinatorially.
//
// The primary route is the Murnaghan–Nakayama recursion: peel border strips
// off λ, one per part of μ, with sign (−1)^{height}. An independent route
// enumerates whole border strip tableaux cell by cell.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <memory>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permfact/dense_matrix.hpp"
#include "permfact/exact.hpp"
#include "permfact/partition.hpp"

namespace permfact {

inline constexpr int kDefaultTableauMaxN = 8;

struct StripRemoval {
  Partition remainder;
  int height = 0;  // rows touched − 1
};

/// Every way to remove a border strip of `size` cells from `shape` leaving a
/// partition. The strip is identified by its top row: it starts at the last
/// cell of that row and follows the rim down and to the left.
inline std::vector<StripRemoval> remove_border_strips(const Partition& shape, int size) {
  std::vector<StripRemoval> out;
  const int rows = shape.length();
  for (int top = 0; top < rows; ++top) {
    std::vector<int> rest = shape.parts();
    int remaining = size;
    int row = top;
    bool legal = false;
    while (row < rows) {
      const int here = shape[static_cast<std::size_t>(row)];
      const int below = shape.part_or_zero(static_cast<std::size_t>(row) + 1);
      if (remaining <= here - below) {
        rest[static_cast<std::size_t>(row)] = here - remaining;
        legal = true;
        break;
      }
      // Continuing down: this row keeps columns 1..below-1, the strip takes the rest.
      const int taken = here - below + 1;
      if (remaining <= taken || below == 0) break;
      rest[static_cast<std::size_t>(row)] = below - 1;
      remaining -= taken;
      ++row;
    }
    if (legal) out.push_back({Partition(std::move(rest)), row - top});
  }
  return out;
}

/// Character values for one fixed sequence of strip sizes, memoized on
/// (remaining shape, number of strips consumed).
class StripRecursion {
 public:
  explicit StripRecursion(std::vector<int> strip_sizes) : strips_(std::move(strip_sizes)) {
    for (int s : strips_)
      if (s <= 0) throw std::invalid_argument("strip sizes must be positive");
    for (int s : strips_) total_ += s;
  }

  Int character(const Partition& shape) {
    if (shape.size() != total_)
      throw std::invalid_argument("shape " + shape.label() + " and type have different sizes");
    return eval(shape, 0);
  }

 private:
  struct Key {
    Partition shape;
    std::size_t consumed;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return PartitionHash{}(k.shape) * 31 + k.consumed; }
  };

  Int eval(const Partition& shape, std::size_t consumed) {
    if (consumed == strips_.size()) return shape.size() == 0 ? Int(1) : Int(0);
    Key key{shape, consumed};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Int sum = 0;
    for (const auto& removal : remove_border_strips(shape, strips_[consumed])) {
      Int sub = eval(removal.remainder, consumed + 1);
      if (removal.height % 2) sum -= sub; else sum += sub;
    }
    memo_.emplace(std::move(key), sum);
    return sum;
  }

  std::vector<int> strips_;
  int total_ = 0;
  std::unordered_map<Key, Int, KeyHash> memo_;
};

/// χ^λ(μ), consuming μ's parts largest first.
inline Int mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("|lambda| != |mu|");
  return StripRecursion(mu.parts()).character(lambda);
}

/// χ^λ with strips removed in the given order (any composition of n).
inline Int mn_character(const Partition& lambda, std::span<const int> strip_order) {
  return StripRecursion(std::vector<int>(strip_order.begin(), strip_order.end())).character(lambda);
}

/// A border strip tableau: filling[row][col] holds the 1-based label of the
/// strip containing the cell; label i covers μ_i cells.
struct BorderStripTableau {
  Partition shape;
  std::vector<std::vector<int>> filling;
  int height = 0;
  int width = 0;
};

namespace detail {

using Cells = std::vector<std::pair<int, int>>;

inline Cells skew_cells(const std::vector<int>& outer, const std::vector<int>& inner) {
  Cells cells;
  for (std::size_t r = 0; r < outer.size(); ++r) {
    const int lo = r < inner.size() ? inner[r] : 0;
    for (int c = lo; c < outer[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  }
  return cells;
}

inline bool contains(const Cells& cells, int r, int c) {
  return std::find(cells.begin(), cells.end(), std::pair{r, c}) != cells.end();
}

// Connected (edge adjacency) and free of 2×2 blocks.
inline bool is_border_strip(const Cells& cells) {
  if (cells.empty()) return false;
  for (auto [r, c] : cells)
    if (contains(cells, r + 1, c) && contains(cells, r, c + 1) && contains(cells, r + 1, c + 1)) return false;
  std::vector<bool> seen(cells.size(), false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    auto [r, c] = cells[frontier.front()];
    frontier.pop();
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (seen[j]) continue;
      auto [r2, c2] = cells[j];
      if (std::abs(r - r2) + std::abs(c - c2) == 1) {
        seen[j] = true;
        ++reached;
        frontier.push(j);
      }
    }
  }
  return reached == cells.size();
}

inline int span_of(const Cells& cells, bool rows) {
  int lo = 1 << 30, hi = -1;
  for (auto [r, c] : cells) {
    const int v = rows ? r : c;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

// Enumerate every partition ρ with inner ⊆ ρ ⊆ outer and |ρ| − |inner| = add.
inline void grow_shapes(const std::vector<int>& outer, const std::vector<int>& inner, std::size_t row, int add,
                        std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (row == outer.size()) {
    if (add == 0) out.push_back(current);
    return;
  }
  const int lo = row < inner.size() ? inner[row] : 0;
  int hi = outer[row];
  if (row > 0) hi = std::min(hi, current[row - 1]);
  for (int len = lo; len <= hi && len - lo <= add; ++len) {
    current[row] = len;
    grow_shapes(outer, inner, row + 1, add - (len - lo), current, out);
  }
}

}  // namespace detail

/// Exhaustive list of border strip tableaux of shape λ and type μ.
/// Guarded by a size ceiling since the count grows factorially.
inline std::vector<BorderStripTableau> enumerate_bst(const Partition& lambda, const Partition& mu,
                                                     int max_n = kDefaultTableauMaxN) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("|lambda| != |mu|");
  if (lambda.size() > max_n)
    throw std::out_of_range("tableau enumeration limited to n <= " + std::to_string(max_n));

  const std::vector<int>& outer = lambda.parts();
  std::vector<BorderStripTableau> result;
  std::vector<std::vector<int>> chain{std::vector<int>(outer.size(), 0)};

  auto recurse = [&](auto&& self, std::size_t label) -> void {
    const std::vector<int> inner = chain.back();
    if (label == static_cast<std::size_t>(mu.length())) {
      BorderStripTableau t;
      t.shape = lambda;
      for (int len : outer) t.filling.emplace_back(static_cast<std::size_t>(len), 0);
      for (std::size_t i = 1; i < chain.size(); ++i) {
        const auto cells = detail::skew_cells(chain[i], chain[i - 1]);
        for (auto [r, c] : cells) t.filling[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>(i);
        t.height += detail::span_of(cells, true);
        t.width += detail::span_of(cells, false);
      }
      result.push_back(std::move(t));
      return;
    }
    std::vector<std::vector<int>> candidates;
    std::vector<int> current(outer.size(), 0);
    detail::grow_shapes(outer, inner, 0, mu[label], current, candidates);
    for (auto& next : candidates) {
      if (!detail::is_border_strip(detail::skew_cells(next, inner))) continue;
      chain.push_back(std::move(next));
      self(self, label + 1);
      chain.pop_back();
    }
  };
  recurse(recurse, 0);
  return result;
}

/// Σ_T (−1)^{ht(T)} over enumerated tableaux.
inline Int signed_tableau_count(const std::vector<BorderStripTableau>& tableaux) {
  Int sum = 0;
  for (const auto& t : tableaux) sum += (t.height % 2 ? -1 : 1);
  return sum;
}

/// n! / ∏ hook lengths, the number of standard Young tableaux of shape λ.
inline Int hook_length_dimension(const Partition& lambda) {
  Int product = 1;
  for (int h : hook_lengths(lambda)) product *= h;
  const Int nf = factorial(lambda.size());
  if (nf % product != 0) throw consistency_error("hook product does not divide n! for " + lambda.label());
  return nf / product;
}

/// Hook-length dimension, cross-checked against χ^λ(1^n) from the recursion.
inline Int dimension_hook_formula(const Partition& lambda) {
  Int dim = hook_length_dimension(lambda);
  if (dim != mn_character(lambda, Partition::ones(lambda.size())))
    throw consistency_error("hook length formula disagrees with recursion for " + lambda.label());
  return dim;
}

/// values(λ, ν) = χ^λ(ν), both indexed in canonical order.
class CharacterTable {
 public:
  CharacterTable() = default;
  CharacterTable(std::shared_ptr<const PartitionIndex> index, DenseMatrix<Int> values)
      : index_(std::move(index)), values_(std::move(values)) {}

  int n() const { return index_->n(); }
  std::size_t dim() const { return index_->size(); }
  const PartitionIndex& index() const { return *index_; }
  std::shared_ptr<const PartitionIndex> shared_index() const { return index_; }
  const DenseMatrix<Int>& values() const { return values_; }

  const Int& operator()(std::size_t lambda, std::size_t nu) const { return values_(lambda, nu); }
  const Int& at(const Partition& lambda, const Partition& nu) const {
    return values_(index_->rank(lambda), index_->rank(nu));
  }
  /// u_λ = (χ^λ(ν))_ν.
  std::vector<Int> row(std::size_t lambda) const {
    auto r = values_.row(lambda);
    return {r.begin(), r.end()};
  }
  /// χ^λ(1^n) for each λ; 1^n is rank 0 in canonical order.
  std::vector<Int> dimensions() const {
    std::vector<Int> d;
    for (std::size_t l = 0; l < dim(); ++l) d.push_back(values_(l, 0));
    return d;
  }

  friend bool operator==(const CharacterTable& a, const CharacterTable& b) {
    return a.n() == b.n() && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const PartitionIndex> index_;
  DenseMatrix<Int> values_;
};

/// Full table. Columns are split across `jobs` workers, each with its own
/// memo; the result does not depend on the job count.
inline CharacterTable build_character_table(int n, int max_n = kDefaultMaxN, unsigned jobs = 1) {
  auto index = std::make_shared<const PartitionIndex>(n, max_n);
  const std::size_t p = index->size();
  DenseMatrix<Int> values(p, p);
  auto fill_columns = [&](std::size_t first, std::size_t stride) {
    for (std::size_t nu = first; nu < p; nu += stride) {
      StripRecursion recursion((*index)[nu].parts());
      for (std::size_t lambda = 0; lambda < p; ++lambda) values(lambda, nu) = recursion.character((*index)[lambda]);
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(p)));
  if (jobs == 1) {
    fill_columns(0, 1);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(fill_columns, w, jobs);
  }
  return CharacterTable(std::move(index), std::move(values));
}

}  // namespace permfact
