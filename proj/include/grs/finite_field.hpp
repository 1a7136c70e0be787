#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace grs {

bool is_prime(long n);

/// Smallest quadratic non-residue modulo an odd prime.
int smallest_nonresidue(int p);

/// a + b*w in F_{p^2}, where w^2 = t for the field's fixed non-residue t.
struct FqElement {
  int a = 0;
  int b = 0;

  bool is_zero() const { return a == 0 && b == 0; }
  friend auto operator<=>(const FqElement&, const FqElement&) = default;
};

/// The field F_{p^2} = F_p[x]/(x^2 - t), t the smallest non-residue mod p.
/// Immutable after construction.
class Fp2 {
 public:
  /// Throws NotPrime unless p is an odd prime.
  explicit Fp2(int p);

  int p() const { return p_; }
  int q() const { return p_ * p_; }
  /// The constant t of the defining polynomial x^2 - t.
  int nonresidue() const { return t_; }

  FqElement make(long a, long b = 0) const;
  FqElement zero() const { return {0, 0}; }
  FqElement one() const { return {1, 0}; }

  FqElement add(FqElement x, FqElement y) const;
  FqElement sub(FqElement x, FqElement y) const;
  FqElement neg(FqElement x) const;
  FqElement mul(FqElement x, FqElement y) const;
  FqElement scale(long k, FqElement x) const;
  FqElement pow(FqElement x, long e) const;
  /// Throws ZeroElement.
  FqElement inv(FqElement x) const;
  FqElement frobenius(FqElement x) const { return pow(x, p_); }

  /// x^{(q-1)/2} == 1. Throws ZeroElement for zero.
  bool is_square(FqElement x) const;

  /// Dense index a + b*p in [0, q).
  int index(FqElement x) const { return x.a + x.b * p_; }
  FqElement from_index(int i) const { return {i % p_, i / p_}; }
  std::vector<FqElement> elements() const;
  std::vector<FqElement> nonzero_elements() const;

  /// "a+b*w".
  std::string to_string(FqElement x) const;

 private:
  int mod(long v) const;

  int p_;
  int t_;
};

/// F_p-lines (one-dimensional subspaces) of F_{p^2} split by square status.
struct SquareLinesReport {
  int p = 0;
  int square_lines = 0;
  int nonsquare_lines = 0;
  bool homogeneous = true;  // every line is all-square or all-non-square
};

SquareLinesReport square_lines(int p);

}  // namespace grs
