#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hooklab {

/// Exact rational number. GMP keeps it reduced with a positive denominator as
/// long as every value enters through make_rational or arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p/q", or just "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer factorial(unsigned n) {
  Integer z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return z;
}

inline Integer binomial(long n, unsigned k) {
  Integer z;
  mpz_bin_ui(z.get_mpz_t(), Integer(n).get_mpz_t(), k);
  return z;
}

/// (a)_m = a(a-1)...(a-m+1) for integer a, m >= 0.
inline Integer falling_factorial(const Integer& a, unsigned m) {
  Integer z = 1;
  for (unsigned i = 0; i < m; ++i) {
    z *= a - i;
  }
  return z;
}

}  // namespace hooklab
