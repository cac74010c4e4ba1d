#pragma once

// Test-side oracles. None of these call into the library's algorithms; each
// recomputes a quantity from its definition by a different route.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "permfact/exact.hpp"
#include "permfact/multipoly.hpp"

namespace oracle {

using permfact::Int;
using permfact::MultiPoly;
using permfact::Rational;

// Partitions of n with every part <= largest.
inline std::int64_t partition_count(int n, int largest) {
  if (n == 0) return 1;
  if (largest == 0) return 0;
  std::int64_t total = 0;
  for (int part = std::min(n, largest); part >= 1; --part) total += partition_count(n - part, part);
  return total;
}

inline std::int64_t partition_count(int n) { return partition_count(n, n); }

// Standard Young tableaux of `shape`: place n, n-1, ... into removable corners.
inline Int syt_count(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  Int total = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
    if (!corner) continue;
    --shape[r];
    total += syt_count(shape);
    ++shape[r];
  }
  return total;
}

// Semistandard tableaux of `shape` with content `content` (Kostka number),
// by filling cells row by row with weakly increasing rows and strictly
// increasing columns.
inline Int kostka(const std::vector<int>& shape, const std::vector<int>& content) {
  std::vector<std::vector<int>> grid;
  for (int len : shape) grid.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> left = content;
  Int count = 0;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == grid.size()) {
      if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) ++count;
      return;
    }
    if (c == grid[r].size()) return fill(r + 1, 0);
    const int lo = std::max(c ? grid[r][c - 1] : 1, r ? grid[r - 1][c] + 1 : 1);
    for (int v = lo; v <= static_cast<int>(left.size()); ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      --left[static_cast<std::size_t>(v - 1)];
      grid[r][c] = v;
      fill(r, c + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(0, 0);
  return count;
}

inline void exponent_vectors(int vars, int degree, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == vars - 1) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    cur.push_back(e);
    exponent_vectors(vars, degree - e, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> exponent_vectors(int vars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  exponent_vectors(vars, degree, cur, out);
  return out;
}

// h_n: every monomial of degree n with coefficient 1.
inline MultiPoly complete_homogeneous(int n, int vars) {
  MultiPoly h(vars);
  for (auto& e : exponent_vectors(vars, n)) h.add_term(e, Rational(1));
  return h;
}

// e_n: squarefree monomials of degree n.
inline MultiPoly elementary(int n, int vars) {
  MultiPoly e(vars);
  for (auto& v : exponent_vectors(vars, n))
    if (std::all_of(v.begin(), v.end(), [](int x) { return x <= 1; })) e.add_term(v, Rational(1));
  return e;
}

// Permutations of {0,1,2} as image arrays.
using Perm3 = std::array<int, 3>;

inline Perm3 compose3(const Perm3& a, const Perm3& b) { return {a[b[0]], a[b[1]], a[b[2]]}; }

// Ordered k-tuples of transpositions of S_3 whose product equals `target`.
inline int s3_factorizations(const Perm3& target, int k) {
  const std::array<Perm3, 3> taus{{{1, 0, 2}, {2, 1, 0}, {0, 2, 1}}};
  int total = 0;
  std::vector<int> digits(static_cast<std::size_t>(k), 0);
  for (;;) {
    Perm3 prod{0, 1, 2};
    for (int d : digits) prod = compose3(taus[static_cast<std::size_t>(d)], prod);
    if (prod == target) ++total;
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == 3) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return total;
}

// Frobenius: χ^λ(μ) is the coefficient of x^{λ+δ} in a_δ · p_μ, N = n.
inline Int frobenius_character(const std::vector<int>& lambda, const std::vector<int>& mu) {
  const int n = std::accumulate(mu.begin(), mu.end(), 0);
  const int vars = n;
  // a_δ = Σ_σ sgn(σ) x^{σ(δ)}.
  MultiPoly vandermonde(vars);
  std::vector<int> perm(static_cast<std::size_t>(vars));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < vars; ++i)
      for (int j = i + 1; j < vars; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    std::vector<int> e(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) e[static_cast<std::size_t>(i)] = vars - 1 - perm[static_cast<std::size_t>(i)];
    vandermonde.add_term(e, Rational(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  MultiPoly prod = vandermonde;
  for (int part : mu) {
    MultiPoly p(vars);
    for (int i = 0; i < vars; ++i) {
      std::vector<int> e(static_cast<std::size_t>(vars), 0);
      e[static_cast<std::size_t>(i)] = part;
      p.add_term(e, Rational(1));
    }
    prod = prod * p;
  }
  std::vector<int> target(static_cast<std::size_t>(vars), 0);
  for (int i = 0; i < vars; ++i)
    target[static_cast<std::size_t>(i)] = (i < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(i)] : 0) + vars - 1 - i;
  const Rational c = prod.coefficient(target);
  return permfact::to_int(c);
}

}  // namespace oracle
