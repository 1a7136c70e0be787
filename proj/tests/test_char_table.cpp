#include <doctest.h>

#include "grs/char_table.hpp"
#include "grs/data.hpp"
#include "grs/error.hpp"

#include <algorithm>

using grs::Cyclotomic;
using grs::Rational;

TEST_CASE("psl2_slice for p = 3 is the A6 slice") {
  auto t = grs::psl2_slice(3);
  CHECK(t.group_order == 360);
  CHECK(t.find_class("c").class_size == 40);
  CHECK(t.find_class("d").class_size == 40);
  CHECK(t.chars.size() == 7);
  std::vector<std::int64_t> degrees;
  for (const auto& c : t.chars) degrees.push_back(c.degree);
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<std::int64_t>{1, 5, 5, 8, 8, 9, 10});
  const auto& eta = t.find_char("eta");
  CHECK(eta.at("1") == Cyclotomic(5));
  CHECK(eta.at("c") == Cyclotomic(2));
  CHECK(eta.at("d") == Cyclotomic(-1));
}

TEST_CASE("psl2_slice rows and orthogonality") {
  for (int p : {3, 5, 7, 11, 13}) {
    auto t = grs::psl2_slice(p);
    const std::int64_t q = std::int64_t(p) * p;
    CHECK(t.chars.size() == std::size_t((q + 5) / 2));
    CHECK(t.group_order == q * (q * q - 1) / 2);
    const auto& eta = t.find_char("eta");
    CHECK(eta.at("c") - eta.at("d") == Cyclotomic(p));
    CHECK(eta.at("c") + eta.at("d") == Cyclotomic(1));
    CHECK(t.find_char("eta~").at("c") == eta.at("d"));
    CHECK(eta.degree == (q + 1) / 2);
    auto report = grs::validate_orthogonality(t);
    CHECK(report.ok());
    CHECK(report.entries.size() == 6);
    for (const auto& c : t.chars) CHECK(c.at("1") == Cyclotomic(Rational(c.degree)));
  }
  auto t5 = grs::psl2_slice(5);
  CHECK(t5.chars.size() == 15);
  CHECK(t5.find_char("St").at("1") == Cyclotomic(25));
  CHECK(t5.find_char("St").at("c") == Cyclotomic(0));
  CHECK_THROWS_AS(grs::psl2_slice(9), grs::NotPrime);
}

TEST_CASE("orthogonality entries for PSL(2,9)") {
  auto report = grs::validate_orthogonality(grs::psl2_slice(3));
  auto find = [&](const std::string& x, const std::string& y) {
    for (const auto& e : report.entries)
      if (e.x == x && e.y == y) return e.computed;
    FAIL("missing entry");
    return Cyclotomic();
  };
  // 1 + 0 + (q-5)/4 + (q-1)/4 + ((1+p)/2)^2 + ((1-p)/2)^2 with q = 9, p = 3
  CHECK(find("c", "c") == Cyclotomic(1 + 0 + 1 + 2 + 4 + 1));
  CHECK(find("c", "d") == Cyclotomic(0));
  CHECK(find("1", "1") == Cyclotomic(360));
}

TEST_CASE("shipped PSL(3,3) table") {
  auto t = grs::load_table(grs::psl33_table_path());
  CHECK(t.group_order == 5616);
  CHECK(t.find_class("a").element_order == 3);
  CHECK(t.find_class("b").element_order == 3);
  CHECK(t.find_class("a").centralizer_order == 54);
  const auto& chi = t.find_char("chi");
  CHECK(chi.at("1") == Cyclotomic(12));
  CHECK(chi.at("a") == Cyclotomic(3));
  CHECK(chi.at("b") == Cyclotomic(0));
  const auto& phi = t.find_char("phi");
  CHECK(phi.at("1") == Cyclotomic(16));
  CHECK(phi.at("a") == Cyclotomic(-2));
  CHECK(phi.at("b") == Cyclotomic(1));
  CHECK(grs::validate_orthogonality(t).ok());
  CHECK(&t.trivial() == &t.find_char("1a"));
}

TEST_CASE("every PSL(3,3) row is chi, phi and a part equal on a and b") {
  auto t = grs::load_table(grs::psl33_table_path());
  auto rows = grs::decompose_on_support(t, {"chi", "phi"}, {"a", "b"});
  CHECK(rows.size() == t.chars.size());
  for (const auto& d : rows) {
    INFO(d.row);
    CHECK(d.nonnegative);
    CHECK(d.residual_degree.as_rational() >= 0);
  }
  auto find = [&](const std::string& name) {
    return *std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.row == name; });
  };
  CHECK(find("13a").coeffs == std::vector<std::int64_t>{1, 0});
  CHECK(find("13a").residual_value == Cyclotomic(1));
  CHECK(find("39a").coeffs == std::vector<std::int64_t>{1, 0});
  CHECK(find("39a").residual_degree == Cyclotomic(27));
  CHECK(find("16b").coeffs == std::vector<std::int64_t>{0, 1});
  CHECK(find("26a").coeffs == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("eta~ is determined by eta on the unipotent classes") {
  auto t = grs::psl2_slice(7);
  auto rows = grs::decompose_on_support(t, {"eta"}, {"c", "d"});
  auto it = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return r.row == "eta~"; });
  REQUIRE(it != rows.end());
  CHECK(it->coeffs == std::vector<std::int64_t>{-1});
  CHECK(it->residual_value == Cyclotomic(1));
  CHECK_FALSE(it->nonnegative);
}

TEST_CASE("table parser errors") {
  const std::string good =
      "group C2 order 2\nclass 1 1 1\nclass t 2 1\nchar triv 1 1 1\nchar sign 1 1 -1\n";
  auto t = grs::parse_table(good);
  CHECK(t.chars.size() == 2);
  CHECK_THROWS_AS(grs::parse_table("class 1 1 1\n"), grs::ParseError);
  CHECK_THROWS_AS(grs::parse_table("group C2 order 2\nclass 1 1 1\nclass t 2 1\nchar triv 1 1\n"),
                  grs::ParseError);
  CHECK_THROWS_AS(grs::parse_table("group C2 order 2\nclass 1 1 1\nclass t 2 1\nchar triv 1 1 x\n"),
                  grs::ParseError);
  CHECK_THROWS_AS(grs::parse_table("group C2 order 2\nclass 1 1 1\nfoo\n"), grs::ParseError);
  // Orthogonality failure
  CHECK_THROWS_AS(
      grs::parse_table("group C2 order 2\nclass 1 1 1\nclass t 2 1\nchar triv 1 1 1\nchar sign 1 1 1\n"),
      grs::ValidationError);
  // Degree disagrees with the identity column
  CHECK_THROWS_AS(
      grs::parse_table("group C2 order 2\nclass 1 1 1\nclass t 2 1\nchar triv 1 2 1\nchar sign 1 1 -1\n"),
      grs::ValidationError);
  CHECK_THROWS_AS(grs::load_table("/nonexistent/file.tbl"), grs::ParseError);
}
