#include "grs/rational.hpp"

#include "grs/error.hpp"

#include <cctype>

namespace grs {

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("not a rational: '" + s + "'");
  if (num.front() == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator: '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

}  // namespace grs
