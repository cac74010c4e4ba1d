#pragma once

// The transition matrix A_n on conjugacy classes of S_n.
//
// Index convention: entry (row t, column s) is the number of transpositions τ
// taking a fixed permutation α of type t to a permutation τα of type s. Rows
// sum to C(n,2), and c_k = A^k e_{1^n}.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permfact/dense_matrix.hpp"
#include "permfact/exact.hpp"
#include "permfact/partition.hpp"
#include "permfact/permutation.hpp"
#include "permfact/report.hpp"

namespace permfact {

template <class T = Int>
using ClassVector = std::vector<T>;

/// A square matrix indexed by P(n) × P(n) in canonical order.
class ClassMatrix {
 public:
  ClassMatrix() = default;
  explicit ClassMatrix(std::shared_ptr<const PartitionIndex> index)
      : index_(std::move(index)), entries_(index_->size(), index_->size()) {}

  int n() const { return index_->n(); }
  std::size_t dim() const { return index_->size(); }
  const PartitionIndex& index() const { return *index_; }
  std::shared_ptr<const PartitionIndex> shared_index() const { return index_; }
  const DenseMatrix<Int>& entries() const { return entries_; }
  DenseMatrix<Int>& mutable_entries() { return entries_; }

  const Int& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  const Int& at(const Partition& row, const Partition& col) const {
    return entries_(index_->rank(row), index_->rank(col));
  }

  friend bool operator==(const ClassMatrix& a, const ClassMatrix& b) { return a.entries_ == b.entries_; }

 private:
  std::shared_ptr<const PartitionIndex> index_;
  DenseMatrix<Int> entries_;
};

/// t_{λμ}: transpositions taking one fixed type-λ permutation to type μ.
struct RawCountMatrix : ClassMatrix {
  using ClassMatrix::ClassMatrix;
};

/// A_n built from the closed-form cut/glue weights, plus a sparse view used
/// by matrix–vector products.
class TransitionMatrix : public ClassMatrix {
 public:
  using ClassMatrix::ClassMatrix;

  struct Entry {
    std::size_t col;
    Int value;
  };

  /// Recomputes the sparse row lists from the dense entries.
  void refresh_sparse() {
    sparse_rows_.assign(dim(), {});
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t c = 0; c < dim(); ++c)
        if (entries()(r, c) != 0) sparse_rows_[r].push_back({c, entries()(r, c)});
  }

  const std::vector<Entry>& sparse_row(std::size_t r) const { return sparse_rows_[r]; }

  template <class V>
  ClassVector<V> apply(std::span<const V> v) const {
    if (v.size() != dim()) throw std::invalid_argument("class vector has wrong length");
    ClassVector<V> out(dim(), V(0));
    for (std::size_t r = 0; r < dim(); ++r)
      for (const auto& e : sparse_rows_[r]) out[r] += V(e.value) * v[e.col];
    return out;
  }

  template <class V>
  ClassVector<V> apply_transpose(std::span<const V> v) const {
    if (v.size() != dim()) throw std::invalid_argument("class vector has wrong length");
    ClassVector<V> out(dim(), V(0));
    for (std::size_t r = 0; r < dim(); ++r)
      for (const auto& e : sparse_rows_[r]) out[e.col] += V(e.value) * v[r];
    return out;
  }

 private:
  std::vector<std::vector<Entry>> sparse_rows_;
};

inline RawCountMatrix build_raw_counts(int n, int max_n = kDefaultMaxN) {
  if (n < 2) throw std::out_of_range("transition matrices need n >= 2");
  RawCountMatrix raw(std::make_shared<const PartitionIndex>(n, max_n));
  const auto pairs = transposition_pairs(n);
  for (std::size_t t = 0; t < raw.dim(); ++t) {
    const Permutation alpha = Permutation::representative(raw.index()[t]);
    for (auto [a, b] : pairs) {
      const Partition s = cycle_type(alpha.left_multiply_transposition(a, b));
      raw.mutable_entries()(t, raw.index().rank(s)) += 1;
    }
  }
  return raw;
}

namespace detail {

inline Partition replace_parts(const Partition& source, std::initializer_list<int> removed,
                               std::initializer_list<int> added) {
  std::vector<int> parts = source.parts();
  for (int r : removed) parts.erase(std::find(parts.begin(), parts.end(), r));
  parts.insert(parts.end(), added.begin(), added.end());
  return Partition(std::move(parts));
}

}  // namespace detail

/// A_n from the four cut/glue cases, multiplicities k_i read from the source
/// class s; each weight lands at (row t, column s) for the move s -> t.
///   split m -> i + j, i != j : i j (k_i + 1)(k_j + 1)
///   split m -> i + i         : i^2 (k_i + 1)(k_i + 2) / 2
///   glue  i + i -> m         : i (k_m + 1)
///   glue  i + j -> m, i != j : (i + j)(k_m + 1)
inline TransitionMatrix build_transition_matrix(int n, int max_n = kDefaultMaxN) {
  if (n < 2) throw std::out_of_range("transition matrices need n >= 2");
  TransitionMatrix a(std::make_shared<const PartitionIndex>(n, max_n));
  const PartitionIndex& index = a.index();
  auto place = [&](const Partition& target, std::size_t s, Int value) {
    Int& slot = a.mutable_entries()(index.rank(target), s);
    if (slot != 0) throw consistency_error("two moves map to the same entry");
    slot = std::move(value);
  };

  for (std::size_t s = 0; s < index.size(); ++s) {
    const Partition& src = index[s];
    std::vector<int> distinct = src.parts();
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    for (int m : distinct) {
      for (int i = 1; 2 * i <= m; ++i) {
        const int j = m - i;
        const Int ki = src.multiplicity(i);
        const Partition target = detail::replace_parts(src, {m}, {i, j});
        if (i != j) {
          const Int kj = src.multiplicity(j);
          place(target, s, Int(i) * j * (ki + 1) * (kj + 1));
        } else {
          place(target, s, Int(i) * i * (ki + 1) * (ki + 2) / 2);
        }
      }
    }

    for (std::size_t x = 0; x < distinct.size(); ++x) {
      for (std::size_t y = x; y < distinct.size(); ++y) {
        const int i = distinct[x];
        const int j = distinct[y];
        if (i == j && src.multiplicity(i) < 2) continue;
        const int m = i + j;
        const Int km = src.multiplicity(m);
        const Partition target = detail::replace_parts(src, {i, j}, {m});
        place(target, s, i == j ? Int(i) * (km + 1) : Int(i + j) * (km + 1));
      }
    }
  }
  a.refresh_sparse();
  return a;
}

/// Cross-checks the closed-form matrix against raw transposition counts and
/// the double-counting identity t_{λμ}|C_λ| = t_{μλ}|C_μ|.
inline CheckReport verify_matrix_equality(const TransitionMatrix& formula, const RawCountMatrix& raw) {
  CheckReport report;
  const PartitionIndex& index = formula.index();
  std::vector<Int> sizes;
  for (const auto& p : index) sizes.push_back(class_size(p));
  for (std::size_t t = 0; t < index.size(); ++t) {
    for (std::size_t s = 0; s < index.size(); ++s) {
      if (formula(t, s) != raw(t, s)) {
        report.fail("entry (" + index[t].label() + ", " + index[s].label() + "): formula " +
                    to_decimal(formula(t, s)) + " vs raw " + to_decimal(raw(t, s)));
      }
      if (raw(t, s) * sizes[t] != raw(s, t) * sizes[s]) {
        report.fail("double counting fails at (" + index[t].label() + ", " + index[s].label() + ")");
      }
    }
  }
  return report;
}

inline CheckReport verify_matrix_equality(int n, int max_n = kDefaultMaxN) {
  return verify_matrix_equality(build_transition_matrix(n, max_n), build_raw_counts(n, max_n));
}

/// A^k v by repeated sparse products.
template <class V>
ClassVector<V> matrix_power_apply(const TransitionMatrix& a, unsigned k, ClassVector<V> v) {
  for (unsigned step = 0; step < k; ++step) v = a.apply(std::span<const V>(v));
  return v;
}

inline ClassVector<Int> indicator(const PartitionIndex& index, const Partition& p) {
  ClassVector<Int> v(index.size(), Int(0));
  v[index.rank(p)] = 1;
  return v;
}

/// Lower bound on the multiplicity of the eigenvalue 0: the number of
/// self-conjugate partitions, each of which carries ρ = 0.
inline Int zero_multiplicity_lower_bound(int n, int max_n = kDefaultMaxN) {
  if (n < 2) throw std::out_of_range("n >= 2 required");
  const PartitionIndex index(n, max_n);
  Int self_conj = 0;
  Int zero_rho = 0;
  for (const auto& p : index) {
    const bool sc = is_self_conjugate(p);
    const Int r = rho(p);
    if (sc) {
      ++self_conj;
      if (r != 0) throw consistency_error("self-conjugate " + p.label() + " has nonzero rho");
    }
    if (r == 0) ++zero_rho;
  }
  if (zero_rho < self_conj) throw consistency_error("fewer zero eigenvalues than self-conjugate partitions");
  if (self_conj != self_conjugate_count(n, max_n)) throw consistency_error("self-conjugate census disagrees");
  return self_conj;
}

/// Every row sums to C(n,2).
inline bool rows_sum_to_binomial(const ClassMatrix& a) {
  const Int expected = binomial(a.n(), 2);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    Int sum = 0;
    for (std::size_t c = 0; c < a.dim(); ++c) sum += a(r, c);
    if (sum != expected) return false;
  }
  return true;
}

/// Nonzero entries only join classes whose lengths differ by one.
inline bool is_length_bipartite(const ClassMatrix& a) {
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (a(r, c) == 0) continue;
      const int dl = a.index()[r].length() - a.index()[c].length();
      if (dl != 1 && dl != -1) return false;
    }
  return true;
}

}  // namespace permfact
