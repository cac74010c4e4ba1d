#pragma once

// Exact scalars. Counts grow like C(n,2)^k, so nothing here is fixed-width.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace permfact {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when two routes that must agree do not, or when a quantity that is
/// integral by theory comes out fractional. Always signals a bug.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_decimal(const Int& x) { return x.str(); }

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_decimal(const Rational& x) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("bad integer literal");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9')
      throw std::invalid_argument("bad integer literal: " + std::string(text));
  return Int(std::string(text));
}

inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

inline bool is_integral(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

inline Int to_int(const Rational& x) {
  if (!is_integral(x))
    throw consistency_error("expected an integer, got " + to_decimal(x));
  return boost::multiprecision::numerator(x);
}

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Int pow(const Int& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline int sign_power(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace permfact
