#include <doctest.h>

#include "grs/char_table.hpp"
#include "grs/data.hpp"
#include "grs/error.hpp"
#include "grs/partial_aug.hpp"

#include <random>

using grs::AugVector;
using grs::Cyclotomic;
using grs::Rational;

namespace {

grs::CharProfile forced_profile(const grs::TableSlice& t, const std::map<std::string, Cyclotomic>& distinguished) {
  // Rows equal on the support take their common value; others as given.
  grs::CharProfile pr;
  for (const auto& row : t.chars) {
    auto it = distinguished.find(row.name);
    pr.values[row.name] = it != distinguished.end() ? it->second : row.at(t.classes[1].id);
  }
  return pr;
}

}  // namespace

TEST_CASE("invert_profile on PSL(3,3)") {
  auto t = grs::load_table(grs::psl33_table_path());
  // From the chi and phi rows: 3 eps_a = 9, eps_b = 1 - eps_a.
  AugVector target;
  target.support = {"a", "b"};
  target.values = {{"a", 3}, {"b", -2}};
  auto profile = grs::synthesize_profile(t, target);
  CHECK(profile.values.at("chi") == Cyclotomic(9));
  CHECK(profile.values.at("phi") == Cyclotomic(-8));
  auto eps = grs::invert_profile(t, profile, {"a", "b"});
  CHECK(eps.at("a") == 3);
  CHECK(eps.at("b") == -2);
  CHECK(eps.integral());
  CHECK_FALSE(grs::mrsw_conjugate_to_group_element(eps));
}

TEST_CASE("invert_profile on PSL(2,p^2)") {
  for (int p : {3, 7}) {
    auto t = grs::psl2_slice(p);
    auto eps = grs::invert_profile(t, grs::profile_of_class(t, "c"), {"c", "d"});
    CHECK(eps.at("c") == 1);
    CHECK(eps.at("d") == 0);
    CHECK(grs::mrsw_conjugate_to_group_element(eps));

    Cyclotomic half(grs::ratio(p + 1, 2));
    auto bad = forced_profile(t, {{"eta", half}, {"eta~", half}});
    CHECK_THROWS_AS(grs::invert_profile(t, bad, {"c", "d"}), grs::Inconsistent);
  }
}

TEST_CASE("invert_profile preconditions") {
  auto t = grs::psl2_slice(3);
  auto pr = grs::profile_of_class(t, "c");
  CHECK_THROWS_AS(grs::invert_profile(t, pr, {"1", "c"}), grs::PreconditionFailed);
  pr.values.erase("St");
  CHECK_THROWS_AS(grs::invert_profile(t, pr, {"c", "d"}), grs::PreconditionFailed);

  // c and d are indistinguishable without eta and eta~.
  grs::TableSlice reduced = t;
  reduced.chars.erase(std::remove_if(reduced.chars.begin(), reduced.chars.end(),
                                     [](const auto& c) { return c.name.rfind("eta", 0) == 0; }),
                      reduced.chars.end());
  CHECK_THROWS_AS(grs::invert_profile(reduced, grs::profile_of_class(reduced, "c"), {"c", "d"}),
                  grs::Underdetermined);
}

TEST_CASE("group elements invert to their class indicator") {
  std::vector<grs::TableSlice> tables;
  for (int p : {3, 5, 7, 11, 13}) tables.push_back(grs::psl2_slice(p));
  tables.push_back(grs::load_table(grs::psl33_table_path()));
  for (const auto& t : tables) {
    std::vector<std::string> support;
    for (std::size_t i = 1; i < t.classes.size(); ++i) support.push_back(t.classes[i].id);
    for (const auto& id : support) {
      auto eps = grs::invert_profile(t, grs::profile_of_class(t, id), support);
      CHECK(eps == grs::indicator(support, id));
    }
  }
}

TEST_CASE("inversion is linear and round-trips") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<grs::TableSlice> tables{grs::psl2_slice(5), grs::psl2_slice(11), grs::load_table(grs::psl33_table_path())};
  for (const auto& t : tables) {
    std::vector<std::string> support{t.classes[1].id, t.classes[2].id};
    for (int trial = 0; trial < 25; ++trial) {
      // Integer combination of indicators with total one.
      int k = d(rng);
      AugVector v;
      v.support = support;
      v.values = {{support[0], k}, {support[1], 1 - k}};
      auto profile = grs::synthesize_profile(t, v);
      CHECK(profile.values.at(t.trivial().name) == Cyclotomic(1));
      CHECK(grs::invert_profile(t, profile, support) == v);

      Rational frac = grs::ratio(d(rng), 7);
      AugVector w;
      w.support = support;
      w.values = {{support[0], frac}, {support[1], 1 - frac}};
      auto back = grs::invert_profile(t, grs::synthesize_profile(t, w), support);
      CHECK(back == w);
      CHECK(back.integral() == grs::is_integer(frac));
    }
  }
}

TEST_CASE("rational conjugacy criterion") {
  auto make = [](Rational a, Rational b) {
    AugVector v;
    v.support = {"x", "y"};
    v.values = {{"x", a}, {"y", b}};
    return v;
  };
  CHECK(grs::mrsw_conjugate_to_group_element(make(1, 0)));
  CHECK(grs::mrsw_conjugate_to_group_element(make(0, 1)));
  CHECK_FALSE(grs::mrsw_conjugate_to_group_element(make(3, -2)));
  CHECK(make(3, -2).to_string() == "(3,-2)");
  CHECK(grs::to_json(make(grs::ratio(1, 2), grs::ratio(1, 2)))["x"] == "1/2");
}

TEST_CASE("admissible_subgroup") {
  CHECK(grs::admissible_subgroup(27, 3, 5616, 312));
  // exponent of PSL(2,49) is lcm(7, 24, 25)
  CHECK_FALSE(grs::admissible_subgroup(343, 7, 49 * (49 * 49 - 1) / 2, 4200));
  CHECK(grs::admissible_subgroup(1, 1, 60, 30));
  CHECK_FALSE(grs::admissible_subgroup(4, 4, 60, 30));
  CHECK_THROWS_AS(grs::admissible_subgroup(0, 1, 1, 1), grs::PreconditionFailed);
}
