#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permfact/exact.hpp"

namespace permfact {

inline constexpr int kMaxPolyDegree = 32;

struct PolyDivision;

/// Sparse polynomial in a fixed number of variables with rational
/// coefficients. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  explicit MultiPoly(int vars) : vars_(vars) {
    if (vars < 1) throw std::invalid_argument("polynomials need at least one variable");
  }

  static MultiPoly constant(int vars, const Rational& c) {
    MultiPoly p(vars);
    p.add_term(Exponents(static_cast<std::size_t>(vars), 0), c);
    return p;
  }

  static MultiPoly variable(int vars, int i) {
    Exponents e(static_cast<std::size_t>(vars), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    MultiPoly p(vars);
    p.add_term(std::move(e), Rational(1));
    return p;
  }

  int vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(Exponents e, const Rational& c) {
    if (e.size() != static_cast<std::size_t>(vars_)) throw std::invalid_argument("exponent vector has wrong length");
    if (c == 0) return;
    if (std::accumulate(e.begin(), e.end(), 0) > kMaxPolyDegree) throw std::out_of_range("polynomial degree bound exceeded");
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
  }

  MultiPoly& operator+=(const MultiPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.vars_);
    Exponents e(static_cast<std::size_t>(a.vars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  /// ∂f/∂x_i.
  MultiPoly derivative(int i) const {
    MultiPoly out(vars_);
    const auto v = static_cast<std::size_t>(i);
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exponents d = e;
      --d[v];
      out.add_term(std::move(d), c * e[v]);
    }
    return out;
  }

  /// x_i^power · f.
  MultiPoly times_variable_power(int i, int power) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents d = e;
      d[static_cast<std::size_t>(i)] += power;
      out.add_term(std::move(d), c);
    }
    return out;
  }

  /// f with x_i and x_j exchanged.
  MultiPoly swap_variables(int i, int j) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents d = e;
      std::swap(d[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(j)]);
      out.add_term(std::move(d), c);
    }
    return out;
  }

  /// Invariance under every adjacent transposition of variables.
  bool is_symmetric() const {
    for (int i = 0; i + 1 < vars_; ++i)
      if (swap_variables(i, i + 1) != *this) return false;
    return true;
  }

  /// f = q · (x_i − x_j) + r with r free of x_i. Works by treating f as a
  /// polynomial in x_i over the remaining variables.
  PolyDivision divide_by_difference(int i, int j) const;

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != static_cast<std::size_t>(vars_)) throw std::invalid_argument("evaluation point has wrong length");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t v = 0; v < e.size(); ++v)
        for (int p = 0; p < e[v]; ++p) term *= point[v];
      sum += term;
    }
    return sum;
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void check_compatible(const MultiPoly& other) const {
    if (other.vars_ != vars_) throw std::invalid_argument("polynomials in different numbers of variables");
  }

  int vars_;
  Terms terms_;
};

struct PolyDivision {
  MultiPoly quotient;
  MultiPoly remainder;
};

inline PolyDivision MultiPoly::divide_by_difference(int i, int j) const {
  if (i == j) throw std::invalid_argument("divisor x_i - x_i is zero");
  const auto vi = static_cast<std::size_t>(i);
  const auto vj = static_cast<std::size_t>(j);
  MultiPoly q(vars());
  MultiPoly r = *this;
  for (;;) {
    int top = 0;
    for (const auto& [e, c] : r.terms()) top = std::max(top, e[vi]);
    if (top == 0) break;
    std::vector<std::pair<Exponents, Rational>> leading;
    for (const auto& [e, c] : r.terms())
      if (e[vi] == top) leading.emplace_back(e, c);
    for (auto& [e, c] : leading) {
      Exponents lowered = e;
      --lowered[vi];
      q.add_term(lowered, c);
      r.add_term(e, -c);
      ++lowered[vj];
      r.add_term(std::move(lowered), c);
    }
  }
  return {std::move(q), std::move(r)};
}

}  // namespace permfact
