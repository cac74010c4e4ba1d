#pragma once

// c_k(μ): the number of k-tuples of transpositions whose product is a fixed
// permutation of cycle type μ, by the spectral formula
//
//   c_k(μ) = (1/n!) Σ_λ χ^λ(1^n) χ^λ(μ) ρ_λ^k,
//
// and by the closed forms for one and two cycles.

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "permfact/characters.hpp"
#include "permfact/exact.hpp"
#include "permfact/partition.hpp"
#include "permfact/report.hpp"
#include "permfact/transition_matrix.hpp"

namespace permfact {

/// Character table plus ρ_λ, enough to evaluate c_k for every class of n.
class SpectralCounter {
 public:
  explicit SpectralCounter(CharacterTable table) : table_(std::move(table)) {
    for (const auto& p : table_.index()) rho_.push_back(rho(p));
    n_factorial_ = factorial(table_.n());
  }

  explicit SpectralCounter(int n, int max_n = kDefaultMaxN, unsigned jobs = 1)
      : SpectralCounter(build_character_table(n, max_n, jobs)) {}

  const CharacterTable& table() const { return table_; }
  const std::vector<Int>& rhos() const { return rho_; }

  Int count(const Partition& mu, unsigned k) const {
    if (mu.size() != table_.n()) throw std::invalid_argument("mu is not a partition of " + std::to_string(table_.n()));
    return count_at(table_.index().rank(mu), k);
  }

  Int count_at(std::size_t mu_rank, unsigned k) const {
    Int sum = 0;
    for (std::size_t l = 0; l < table_.dim(); ++l) {
      const Int& chi = table_(l, mu_rank);
      if (chi == 0) continue;
      sum += table_(l, 0) * chi * pow(rho_[l], k);
    }
    if (sum % n_factorial_ != 0)
      throw consistency_error("spectral sum not divisible by n! for " + table_.index()[mu_rank].label());
    Int c = sum / n_factorial_;
    if (c < 0) throw consistency_error("negative factorization count");
    return c;
  }

 private:
  CharacterTable table_;
  std::vector<Int> rho_;
  Int n_factorial_;
};

inline Int count_spectral(const Partition& mu, unsigned k, int max_n = kDefaultMaxN) {
  return SpectralCounter(mu.size(), max_n).count(mu, k);
}

/// Single-cycle closed form (1/n!) Σ_{i<n} C(n−1,i)(−1)^i (C(n,2) − n i)^k.
inline Int count_goulden(int n, unsigned k) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  const Int half = binomial(n, 2);
  Int sum = 0;
  for (int i = 0; i < n; ++i) {
    const Int term = binomial(n - 1, i) * pow(half - Int(n) * i, k);
    if (i % 2) sum -= term; else sum += term;
  }
  const Int nf = factorial(n);
  if (sum % nf != 0) throw consistency_error("single-cycle sum not divisible by n!");
  return sum / nf;
}

/// c_k for every class at once: A_n^k e_{1^n}.
inline ClassVector<Int> count_vector_matrix(const TransitionMatrix& a, unsigned k) {
  return matrix_power_apply(a, k, indicator(a.index(), Partition::ones(a.n())));
}

inline Int count_matrix_method(const Partition& mu, unsigned k, int max_n = kDefaultMaxN) {
  const auto a = build_transition_matrix(mu.size(), max_n);
  return count_vector_matrix(a, k)[a.index().rank(mu)];
}

// ---------------------------------------------------------------------------
// Two cycles, μ = (m, q) with m ≥ q.
//
// Contributing shapes are hooks λ_{a,b} = a 1^b and the two-hook shapes
// λ_{a,b,c,d} = a (c+1) 2^d 1^{b−d−1}, grouped into six index families.
// ---------------------------------------------------------------------------

/// Which table of χ^λ(μ) values to use for the hook families.
enum class HookSigns {
  printed,    // as published: Λ4, Λ5 -> (−1)^b; Λ6 -> 2(−1)^b for q odd, 0 for q even
  rederived,  // Λ4 -> (−1)^b; Λ5 -> (−1)^{b+1}; Λ6 -> (−1)^{b+1} at a = q, else 0
};

struct TwoCycleTerm {
  int family = 0;  // 1..6
  bool is_hook = false;
  int a = 0, b = 0, c = 0, d = 0;
  Partition lambda;
  Int chi_mu;    // χ^λ(μ) claimed by the closed form
  Int dimension; // χ^λ(1^n) from the closed form
  Int rho;       // ρ_λ from the closed form
};

inline Partition two_hook_shape(int a, int b, int c, int d) {
  std::vector<int> parts{a, c + 1};
  parts.insert(parts.end(), static_cast<std::size_t>(d), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(b - d - 1), 1);
  return Partition(std::move(parts));
}

inline Partition hook_shape(int a, int b) {
  std::vector<int> parts{a};
  parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
  return Partition(std::move(parts));
}

/// n!/(a! b! c! d!) · a c (a−c)(b−d) / ((a+b)(a+d)(b+c)(c+d)).
inline Int two_hook_dimension(int a, int b, int c, int d) {
  const int n = a + b + c + d;
  Rational r(factorial(n), factorial(a) * factorial(b) * factorial(c) * factorial(d));
  r *= Rational(Int(a) * c * (a - c) * (b - d), Int(a + b) * (a + d) * (b + c) * (c + d));
  return to_int(r);
}

/// C(a,2) − C(b+1,2) + C(c,2) − C(d+1,2).
inline Int two_hook_rho(int a, int b, int c, int d) {
  return binomial(a, 2) - binomial(b + 1, 2) + binomial(c, 2) - binomial(d + 1, 2);
}

/// ½(n² − n) − n·b for the hook a 1^b.
inline Int hook_rho(int a, int b) {
  const int n = a + b;
  return binomial(n, 2) - Int(n) * b;
}

inline std::vector<TwoCycleTerm> two_cycle_terms(int m, int q, HookSigns signs = HookSigns::printed) {
  if (q < 1 || m < q) throw std::invalid_argument("two-cycle form needs m >= q >= 1");
  std::vector<TwoCycleTerm> terms;
  auto two_hook = [&](int family, int a, int b, int c, int d, Int chi) {
    TwoCycleTerm t;
    t.family = family;
    t.a = a, t.b = b, t.c = c, t.d = d;
    t.lambda = two_hook_shape(a, b, c, d);
    t.chi_mu = std::move(chi);
    t.dimension = two_hook_dimension(a, b, c, d);
    t.rho = two_hook_rho(a, b, c, d);
    terms.push_back(std::move(t));
  };
  auto hook = [&](int family, int a, int b, Int chi) {
    TwoCycleTerm t;
    t.family = family;
    t.is_hook = true;
    t.a = a, t.b = b;
    t.lambda = hook_shape(a, b);
    t.chi_mu = std::move(chi);
    t.dimension = binomial(a + b - 1, b);
    t.rho = hook_rho(a, b);
    terms.push_back(std::move(t));
  };
  const bool equal = (m == q);

  // Λ1 = {λ_{i, m−i, j, q−j} : 1 ≤ j ≤ q, j < i < m − q + j}, empty when m = q.
  if (!equal)
    for (int j = 1; j <= q; ++j)
      for (int i = j + 1; i < m - q + j; ++i) two_hook(1, i, m - i, j, q - j, sign_power((m - i) + (q - j)));

  // Λ2 = {λ_{i, q−j, j, m−i} : 1 ≤ j ≤ q, m − q + j < i ≤ m}; doubled when m = q.
  for (int j = 1; j <= q; ++j)
    for (int i = m - q + j + 1; i <= m; ++i) {
      const int b = q - j, d = m - i;
      two_hook(2, i, b, j, d, Int(equal ? 2 : 1) * sign_power(b + d + 1));
    }

  // Λ3 = {λ_{i, m−j, j, q−i} : 1 ≤ j < i ≤ q}; coincides with Λ2 when m = q.
  if (!equal)
    for (int j = 1; j <= q; ++j)
      for (int i = j + 1; i <= q; ++i) {
        const int b = m - j, d = q - i;
        two_hook(3, i, b, j, d, sign_power(b + d + 1));
      }

  // Λ4 = {λ_{i+q, m−i} : m − q < i ≤ m}.
  for (int i = m - q + 1; i <= m; ++i) hook(4, i + q, m - i, sign_power(m - i));

  // Λ5 = {λ_{i, m−i+q} : 1 ≤ i < q}.
  for (int i = 1; i < q; ++i) {
    const int b = m - i + q;
    hook(5, i, b, signs == HookSigns::printed ? sign_power(b) : -sign_power(b));
  }

  // Λ6 = {λ_{i+q, m−i} : 0 ≤ i ≤ m − q}.
  for (int i = 0; i <= m - q; ++i) {
    const int a = i + q, b = m - i;
    Int chi;
    if (signs == HookSigns::printed)
      chi = (q % 2) ? Int(2 * sign_power(b)) : Int(0);
    else
      chi = (a == q) ? Int(-sign_power(b)) : Int(0);
    hook(6, a, b, chi);
  }
  return terms;
}

/// Evaluates the two-cycle closed form. Rational, since a wrong sign table
/// need not produce an integer.
inline Rational count_two_cycle(int m, int q, unsigned k, HookSigns signs = HookSigns::printed) {
  Int sum = 0;
  for (const auto& t : two_cycle_terms(m, q, signs)) sum += t.chi_mu * t.dimension * pow(t.rho, k);
  return Rational(sum, factorial(m + q));
}

/// Compares every ingredient of the two-cycle closed form against the
/// recursion, hook-length dimensions and content sums, and checks that the six
/// families cover exactly the shapes with χ^λ(μ) ≠ 0.
inline CheckReport two_cycle_audit(int m, int q, const CharacterTable& table, HookSigns signs = HookSigns::printed) {
  CheckReport report;
  const Partition mu({m, q});
  const auto terms = two_cycle_terms(m, q, signs);
  std::set<Partition> covered;
  for (const auto& t : terms) {
    const std::string where = "mu=" + mu.label() + " family " + std::to_string(t.family) + " lambda=" + t.lambda.label();
    if (!covered.insert(t.lambda).second) report.fail(where + ": listed twice");
    const Int truth = table.at(t.lambda, mu);
    if (truth != t.chi_mu) report.fail(where + ": chi " + to_decimal(t.chi_mu) + " vs " + to_decimal(truth));
    if (t.dimension != hook_length_dimension(t.lambda)) report.fail(where + ": dimension mismatch");
    if (t.rho != rho(t.lambda)) report.fail(where + ": rho mismatch");
  }
  const std::size_t mu_rank = table.index().rank(mu);
  for (std::size_t l = 0; l < table.dim(); ++l)
    if (table(l, mu_rank) != 0 && !covered.contains(table.index()[l]))
      report.fail("mu=" + mu.label() + ": lambda=" + table.index()[l].label() + " has nonzero chi but is not listed");
  return report;
}

/// First `terms` coefficients c_j(μ)/j! of f_μ(z) = Σ c_j(μ) z^j / j!.
struct SeriesPrefix {
  Partition mu;
  std::vector<Rational> coefficients;
  int parity = 0;  // n − ℓ(μ) mod 2; coefficients of the other parity vanish
};

inline SeriesPrefix series_prefix(const SpectralCounter& counter, const Partition& mu, unsigned terms) {
  if (terms < 1) throw std::invalid_argument("terms >= 1 required");
  SeriesPrefix s;
  s.mu = mu;
  s.parity = (mu.size() - mu.length()) % 2;
  for (unsigned j = 0; j < terms; ++j) {
    const Int c = counter.count(mu, j);
    if (c != 0 && static_cast<int>(j % 2) != s.parity)
      throw consistency_error("coefficient " + std::to_string(j) + " of f_" + mu.label() + " breaks parity");
    s.coefficients.emplace_back(c, factorial(static_cast<int>(j)));
  }
  return s;
}

inline SeriesPrefix series_prefix(const Partition& mu, unsigned terms, int max_n = kDefaultMaxN) {
  return series_prefix(SpectralCounter(mu.size(), max_n), mu, terms);
}

}  // namespace permfact
