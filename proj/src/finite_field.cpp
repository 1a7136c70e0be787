#include "grs/finite_field.hpp"

#include "grs/error.hpp"

namespace grs {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

int smallest_nonresidue(int p) {
  for (int t = 2; t < p; ++t) {
    long acc = 1;
    for (int i = 0; i < (p - 1) / 2; ++i) acc = acc * t % p;
    if (acc == p - 1) return t;
  }
  throw NotPrime("no quadratic non-residue modulo " + std::to_string(p));
}

Fp2::Fp2(int p) : p_(p), t_(0) {
  if (!is_prime(p) || p == 2) throw NotPrime(std::to_string(p) + " is not an odd prime");
  t_ = smallest_nonresidue(p);
}

int Fp2::mod(long v) const {
  long r = v % p_;
  return static_cast<int>(r < 0 ? r + p_ : r);
}

FqElement Fp2::make(long a, long b) const { return {mod(a), mod(b)}; }

FqElement Fp2::add(FqElement x, FqElement y) const { return {mod(x.a + y.a), mod(x.b + y.b)}; }

FqElement Fp2::sub(FqElement x, FqElement y) const { return {mod(x.a - y.a), mod(x.b - y.b)}; }

FqElement Fp2::neg(FqElement x) const { return {mod(-x.a), mod(-x.b)}; }

FqElement Fp2::mul(FqElement x, FqElement y) const {
  // (a + bw)(c + dw) = ac + t*bd + (ad + bc)w
  long a = static_cast<long>(x.a) * y.a + static_cast<long>(t_) * x.b % p_ * y.b;
  long b = static_cast<long>(x.a) * y.b + static_cast<long>(x.b) * y.a;
  return {mod(a), mod(b)};
}

FqElement Fp2::scale(long k, FqElement x) const { return {mod(k * x.a), mod(k * x.b)}; }

FqElement Fp2::pow(FqElement x, long e) const {
  FqElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

FqElement Fp2::inv(FqElement x) const {
  if (x.is_zero()) throw ZeroElement("inverse of zero in F_" + std::to_string(q()));
  return pow(x, q() - 2);
}

bool Fp2::is_square(FqElement x) const {
  if (x.is_zero()) throw ZeroElement("square test of zero in F_" + std::to_string(q()));
  return pow(x, (q() - 1) / 2) == one();
}

std::vector<FqElement> Fp2::elements() const {
  std::vector<FqElement> out;
  out.reserve(q());
  for (int i = 0; i < q(); ++i) out.push_back(from_index(i));
  return out;
}

std::vector<FqElement> Fp2::nonzero_elements() const {
  std::vector<FqElement> out;
  out.reserve(q() - 1);
  for (int i = 1; i < q(); ++i) out.push_back(from_index(i));
  return out;
}

std::string Fp2::to_string(FqElement x) const {
  return std::to_string(x.a) + "+" + std::to_string(x.b) + "*w";
}

SquareLinesReport square_lines(int p) {
  Fp2 field(p);
  SquareLinesReport report;
  report.p = p;
  std::vector<bool> seen(field.q(), false);
  for (const auto& x : field.nonzero_elements()) {
    if (seen[field.index(x)]) continue;
    bool first = field.is_square(x);
    for (int k = 1; k < p; ++k) {
      FqElement y = field.scale(k, x);
      seen[field.index(y)] = true;
      if (field.is_square(y) != first) report.homogeneous = false;
    }
    ++(first ? report.square_lines : report.nonsquare_lines);
  }
  return report;
}

}  // namespace grs
