#include "grs/cyclotomic.hpp"

#include "grs/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace grs {

namespace {

using Poly = std::vector<Rational>;

std::vector<std::int64_t> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(div.size()) - 1;
    const int nd = static_cast<int>(num.size()) - 1;
    std::vector<std::int64_t> quot(nd - dd + 1, 0);
    for (int k = nd; k >= dd; --k) {
      std::int64_t c = num[k];  // divisor is monic
      quot[k - dd] = c;
      for (int j = 0; j <= dd; ++j) num[k - dd + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Reduces in place modulo Phi_n and pads to phi(n) coefficients.
void reduce(int n, Poly& a) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = a.size(); k-- > deg;) {
    if (a[k] == 0) continue;
    Rational c = a[k];
    for (std::size_t j = 0; j <= deg; ++j) a[k - deg + j] -= c * phi[j];
  }
  a.resize(deg);
}

// Polynomial division over Q; b must be nonzero after trimming.
void divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  const std::size_t db = b.size() - 1;
  q.assign(a.size() >= b.size() ? a.size() - db : 1, Rational(0));
  Rational lead_inv = 1 / b.back();
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  r = std::move(a);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  if (n < 1) throw PreconditionFailed("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const std::vector<std::int64_t>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  std::vector<std::int64_t> poly;
  if (n == 1) {
    poly = {-1, 1};
  } else {
    poly = compute_cyclotomic(n);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] =
      cache.emplace(n, std::make_shared<const std::vector<std::int64_t>>(std::move(poly)));
  return *it->second;
}

int euler_phi(int n) {
  int result = n;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    while (n % f == 0) n /= f;
    result -= result / f;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(const Rational& r) : order_(1), coeffs_{r} { coeffs_[0].canonicalize(); }

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 1) throw PreconditionFailed("cyclotomic order must be positive");
  for (auto& c : coeffs_) c.canonicalize();
  reduce(order_, coeffs_);
}

Cyclotomic Cyclotomic::root(int n, long k) {
  if (n < 1) throw PreconditionFailed("root of unity order must be positive");
  long e = ((k % n) + n) % n;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
  c[e] = 1;
  return Cyclotomic(n, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational()) throw NotRational(to_string());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embed(int m) const {
  if (m % order_ != 0)
    throw PreconditionFailed("cannot embed order " + std::to_string(order_) +
                             " into order " + std::to_string(m));
  if (m == order_) return *this;
  const std::size_t step = m / order_;
  std::vector<Rational> c((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> c(order_, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    c[(order_ - static_cast<int>(i)) % order_] += coeffs_[i];
  return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic");
  if (is_rational()) {
    Cyclotomic out = *this;
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  // Extended Euclid: s*a + t*Phi = g (a nonzero constant, Phi irreducible).
  const auto& phi_int = cyclotomic_polynomial(order_);
  Poly r0(phi_int.begin(), phi_int.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational g_inv = 1 / r1[0];
  for (auto& c : s1) c *= g_inv;
  return Cyclotomic(order_, std::move(s1));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    int m = std::lcm(order_, o.order_);
    *this = embed(m);
    return *this += o.embed(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    if (o.is_rational()) {
      for (auto& c : coeffs_) c *= o.coeffs_[0];
      return *this;
    }
    if (is_rational()) {
      Rational s = coeffs_[0];
      *this = o;
      for (auto& c : coeffs_) c *= s;
      return *this;
    }
    int m = std::lcm(order_, o.order_);
    *this = embed(m);
    return *this *= o.embed(m);
  }
  Poly prod = poly_mul(coeffs_, o.coeffs_);
  reduce(order_, prod);
  coeffs_ = std::move(prod);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  int m = std::lcm(a.order_, b.order_);
  return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return grs::to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << order_;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

nlohmann::json to_json(const Cyclotomic& c) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(to_string(r));
  return {{"order", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Cyclotomic(parse_rational(j.get<std::string>()));
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw ParseError("cyclotomic JSON needs 'order' and 'coeffs'");
  int n = j.at("order").get<int>();
  std::vector<Rational> c;
  for (const auto& e : j.at("coeffs")) c.push_back(parse_rational(e.get<std::string>()));
  if (static_cast<int>(c.size()) != euler_phi(n))
    throw ParseError("cyclotomic of order " + std::to_string(n) + " needs " +
                     std::to_string(euler_phi(n)) + " coefficients");
  return Cyclotomic(n, std::move(c));
}

nlohmann::json value_to_json(const Cyclotomic& c) {
  if (c.is_rational()) return to_string(c.as_rational());
  return to_json(c);
}

}  // namespace grs
