#pragma once

#include "grs/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace grs {

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
/// first. Results are cached; safe to call from several threads.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

/// An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1},
/// reduced modulo the n-th cyclotomic polynomial.
///
/// Operands of different orders are embedded into Q(zeta_lcm) before any
/// binary operation; equality is value equality across orders.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}   // NOLINT

  /// Builds a value from arbitrary-length coefficients (reduced here).
  Cyclotomic(int order, std::vector<Rational> coeffs);

  /// zeta_n^k.
  static Cyclotomic root(int n, long k);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws NotRational when a higher coefficient is nonzero.
  Rational as_rational() const;

  /// The same value written over Q(zeta_m); m must be a multiple of order().
  Cyclotomic embed(int m) const;

  /// Complex conjugate (zeta -> zeta^{-1}).
  Cyclotomic conj() const;
  /// Throws DivisionByZero for zero.
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Human-readable, e.g. "-1 - z3" or "1/2".
  std::string to_string() const;

 private:
  int order_ = 1;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// {"order": n, "coeffs": ["a/b", ...]}
nlohmann::json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

/// Rational values render as "a/b"; others as the object form above.
nlohmann::json value_to_json(const Cyclotomic& c);

}  // namespace grs
