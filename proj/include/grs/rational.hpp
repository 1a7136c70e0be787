#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace grs {

/// Arbitrary-precision rational over GMP's mpq_class. Arithmetic keeps
/// values canonical; the two-argument constructor does not, so build
/// fractions with ratio().
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms. Throws DivisionByZero.
Rational ratio(const Integer& num, const Integer& den);
inline Rational ratio(long num, long den) { return ratio(Integer(num), Integer(den)); }

/// "a/b", or "a" when the denominator is one.
std::string to_string(const Rational& r);

/// Parses "a", "-a", "a/b". Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_den() == 1;
}

}  // namespace grs
