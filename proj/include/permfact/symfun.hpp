#pragma once

// Symmetric polynomials in N variables: power sums, Schur polynomials via
// character values, the second-order operator
//
//   D* = Σ_i x_i² ∂_i² + Σ_{i≠j} (x_i² ∂_i − x_j² ∂_j) / (x_i − x_j),
//
// and the ω involution on power-sum coordinates.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permfact/characters.hpp"
#include "permfact/dense_matrix.hpp"
#include "permfact/exact.hpp"
#include "permfact/multipoly.hpp"
#include "permfact/partition.hpp"
#include "permfact/report.hpp"
#include "permfact/transition_matrix.hpp"

namespace permfact {

class singular_system_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinates in {p_λ : λ ∈ P(n)}, canonical order.
struct PBasisVector {
  int n = 0;
  std::vector<Rational> coords;
  friend bool operator==(const PBasisVector&, const PBasisVector&) = default;
};

inline MultiPoly power_sum(int k, int vars) {
  MultiPoly p(vars);
  for (int i = 0; i < vars; ++i) {
    MultiPoly::Exponents e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(i)] = k;
    p.add_term(std::move(e), Rational(1));
  }
  return p;
}

/// p_λ = ∏ p_{λ_i}.
inline MultiPoly expand_p(const Partition& lambda, int vars) {
  MultiPoly out = MultiPoly::constant(vars, Rational(1));
  for (int part : lambda.parts()) out = out * power_sum(part, vars);
  return out;
}

inline MultiPoly expand(const PBasisVector& v, const PartitionIndex& index, int vars) {
  MultiPoly out(vars);
  for (std::size_t r = 0; r < index.size(); ++r)
    if (v.coords[r] != 0) out += expand_p(index[r], vars) * v.coords[r];
  return out;
}

/// Solves A x = b exactly by Gauss–Jordan elimination.
inline std::vector<Rational> solve_exact(DenseMatrix<Rational> a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_exact needs a square system");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw singular_system_error("singular system at column " + std::to_string(col));
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      std::swap(b[pivot], b[col]);
    }
    const Rational inv = 1 / a(col, col);
    for (std::size_t c = col; c < n; ++c) a(col, c) *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  return b;
}

/// Expansions of every p_ν, ν ∈ P(n), in N variables, and the square system
/// read off the dominant monomials x^σ (σ ∈ P(n) padded with zeros).
class PowerSumBasis {
 public:
  PowerSumBasis(int n, int vars) : index_(n), vars_(vars) {
    for (const auto& nu : index_) expansions_.push_back(expand_p(nu, vars));
  }

  const PartitionIndex& index() const { return index_; }
  int vars() const { return vars_; }
  const MultiPoly& p(std::size_t nu) const { return expansions_[nu]; }

  /// Re-expresses a symmetric homogeneous polynomial of degree n in the
  /// p-basis. Throws singular_system_error when N is too small for the p_ν to
  /// be independent, and consistency_error when f is not in their span.
  PBasisVector coordinates(const MultiPoly& f) const {
    const std::size_t dim = index_.size();
    DenseMatrix<Rational> system(dim, dim);
    std::vector<Rational> rhs(dim);
    for (std::size_t s = 0; s < dim; ++s) {
      const Partition& sigma = index_[s];
      if (sigma.length() > vars_)
        throw singular_system_error("monomial x^" + sigma.label() + " needs " + std::to_string(sigma.length()) +
                                    " variables; p-basis of degree " + std::to_string(index_.n()) +
                                    " is not independent in " + std::to_string(vars_));
      MultiPoly::Exponents e(static_cast<std::size_t>(vars_), 0);
      for (int i = 0; i < sigma.length(); ++i) e[static_cast<std::size_t>(i)] = sigma[static_cast<std::size_t>(i)];
      for (std::size_t nu = 0; nu < dim; ++nu) system(s, nu) = expansions_[nu].coefficient(e);
      rhs[s] = f.coefficient(e);
    }
    PBasisVector v{index_.n(), solve_exact(std::move(system), std::move(rhs))};
    MultiPoly rebuilt(vars_);
    for (std::size_t nu = 0; nu < dim; ++nu)
      if (v.coords[nu] != 0) rebuilt += expansions_[nu] * v.coords[nu];
    if (rebuilt != f) throw consistency_error("polynomial is not in the span of the power sums of degree " + std::to_string(index_.n()));
    return v;
  }

 private:
  PartitionIndex index_;
  int vars_;
  std::vector<MultiPoly> expansions_;
};

inline PBasisVector to_p_basis(const MultiPoly& f, int n) { return PowerSumBasis(n, f.vars()).coordinates(f); }

/// p-coordinates of s_λ: χ^λ(ν)/z_ν.
inline PBasisVector schur_p_coordinates(const Partition& lambda, const CharacterTable& table) {
  PBasisVector v{table.n(), {}};
  const std::size_t l = table.index().rank(lambda);
  for (std::size_t nu = 0; nu < table.dim(); ++nu)
    v.coords.emplace_back(table(l, nu), z_value(table.index()[nu]));
  return v;
}

/// s_λ = Σ_ν χ^λ(ν) p_ν / z_ν, expanded. Every coefficient must be a
/// nonnegative integer.
inline MultiPoly schur_from_characters(const Partition& lambda, int vars, const CharacterTable& table) {
  MultiPoly s = expand(schur_p_coordinates(lambda, table), table.index(), vars);
  for (const auto& [e, c] : s.terms())
    if (!is_integral(c) || c < 0)
      throw consistency_error("Schur polynomial s_" + lambda.label() + " has coefficient " + to_decimal(c));
  return s;
}

/// D* applied to a symmetric polynomial. The divided differences are exact
/// polynomial divisions; a nonzero remainder throws.
inline MultiPoly apply_dstar(const MultiPoly& f) {
  if (!f.is_symmetric()) throw std::invalid_argument("D* is applied to symmetric polynomials only");
  const int vars = f.vars();
  MultiPoly out(vars);
  std::vector<MultiPoly> x2_grad;
  for (int i = 0; i < vars; ++i) {
    const MultiPoly d = f.derivative(i);
    out += d.derivative(i).times_variable_power(i, 2);
    x2_grad.push_back(d.times_variable_power(i, 2));
  }
  // Pairs (i, j) and (j, i) contribute equal terms.
  for (int i = 0; i < vars; ++i)
    for (int j = i + 1; j < vars; ++j) {
      auto [q, r] = (x2_grad[static_cast<std::size_t>(i)] - x2_grad[static_cast<std::size_t>(j)]).divide_by_difference(i, j);
      if (!r.is_zero())
        throw consistency_error("divided difference not exact for pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      out += q * Rational(2);
    }
  return out;
}

/// Matrix of D* on degree-n symmetric polynomials in the p-basis: column ν
/// holds the coordinates of D* p_ν. Requires N > n.
inline DenseMatrix<Rational> matrix_of_dstar(int n, int vars) {
  if (vars <= n) throw std::invalid_argument("matrix of D* requires N > n");
  const PowerSumBasis basis(n, vars);
  const std::size_t dim = basis.index().size();
  DenseMatrix<Rational> m(dim, dim);
  for (std::size_t nu = 0; nu < dim; ++nu) {
    const PBasisVector column = basis.coordinates(apply_dstar(basis.p(nu)));
    for (std::size_t r = 0; r < dim; ++r) m(r, nu) = column.coords[r];
  }
  return m;
}

/// ½ · matrix_of_dstar(n, N) = A_nᵀ + n(N−1) I, entrywise.
inline CheckReport verify_dstar_matrix(const DenseMatrix<Rational>& dstar, const TransitionMatrix& a, int vars) {
  CheckReport report;
  const Rational shift(Int(a.n()) * (vars - 1));
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) {
      const Rational expected = Rational(a(c, r)) + (r == c ? shift : Rational(0));
      if (dstar(r, c) / 2 != expected)
        report.fail("N=" + std::to_string(vars) + " entry (" + a.index()[r].label() + ", " + a.index()[c].label() +
                    "): " + to_decimal(dstar(r, c) / 2) + " vs " + to_decimal(expected));
    }
  return report;
}

/// D* s_λ = (2n(N−1) + 2ρ_λ) s_λ, coefficientwise.
inline CheckReport verify_schur_eigenfunction(const Partition& lambda, int vars, const CharacterTable& table) {
  CheckReport report;
  const MultiPoly s = schur_from_characters(lambda, vars, table);
  const Rational eigenvalue(Int(2) * lambda.size() * (vars - 1) + 2 * rho(lambda));
  if (apply_dstar(s) != s * eigenvalue)
    report.fail("D* s_" + lambda.label() + " != " + to_decimal(eigenvalue) + " s_" + lambda.label() + " (N=" + std::to_string(vars) + ")");
  return report;
}

/// ω p_λ = (−1)^{n−ℓ(λ)} p_λ.
inline PBasisVector omega_on_p(const PBasisVector& v, const PartitionIndex& index) {
  if (v.coords.size() != index.size()) throw std::invalid_argument("coordinate vector has wrong length");
  PBasisVector out = v;
  for (std::size_t r = 0; r < index.size(); ++r)
    if ((index.n() - index[r].length()) % 2) out.coords[r] = -out.coords[r];
  return out;
}

}  // namespace permfact
