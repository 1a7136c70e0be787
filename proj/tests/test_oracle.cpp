#include <doctest.h>

#include "grs/char_table.hpp"
#include "grs/data.hpp"
#include "grs/error.hpp"
#include "grs/oracle.hpp"

#include <filesystem>
#include <fstream>
#include <map>

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("grs_test_" + name);
  std::filesystem::remove_all(d);
  std::filesystem::create_directories(d);
  return d;
}

const grs::MatrixGroup& psl2_9() {
  static const grs::MatrixGroup g = grs::MatrixGroup::enumerate(grs::GroupSpec::psl2(9));
  return g;
}

const grs::MatrixGroup& psl3_3() {
  static const grs::MatrixGroup g = grs::MatrixGroup::enumerate(grs::GroupSpec::psl3(3));
  return g;
}

}  // namespace

TEST_CASE("PSL(2,9)") {
  const auto& g = psl2_9();
  CHECK(g.order() == 360);
  CHECK(g.spec().formula_order() == 360);
  std::size_t total = 0;
  auto classes = g.classes();
  for (const auto& c : classes) {
    total += c.size;
    CHECK(c.centralizer_order * static_cast<std::int64_t>(c.size) == 360);
  }
  CHECK(total == 360);
  CHECK(classes.size() == 7);  // A6
  auto p3 = g.order_p_classes(3);
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].size == 40);
  CHECK(p3[1].size == 40);
  CHECK(g.exponent() == 60);
}

TEST_CASE("PSL(2,9) classes match the slice") {
  auto t = grs::psl2_slice(3);
  auto p3 = psl2_9().order_p_classes(3);
  for (const auto& id : {"c", "d"}) {
    const auto& info = t.find_class(id);
    CHECK(info.class_size == static_cast<std::int64_t>(p3[0].size));
    CHECK(info.centralizer_order == p3[0].centralizer_order);
  }
}

TEST_CASE("Steinberg as a permutation character") {
  auto t = grs::psl2_slice(3);
  const auto& g = psl2_9();
  auto ids = g.class_ids();
  const auto& st = t.find_char("St");
  CHECK(g.fixed_points(g.index_of(g.identity_matrix())) - 1 == st.degree);
  auto c = g.index_of(g.unipotent(1));
  CHECK(grs::Cyclotomic(g.fixed_points(c) - 1) == st.at("c"));
  // w is a square in F_9, so take the first non-square for the other class
  int nonsquare = 1;
  while (g.field().is_square(nonsquare)) ++nonsquare;
  auto d = g.index_of(g.unipotent(nonsquare));
  CHECK(ids[c] != ids[d]);
  CHECK(grs::Cyclotomic(g.fixed_points(d) - 1) == st.at("d"));
}

TEST_CASE("square criterion") {
  CHECK(grs::check_square_criterion(psl2_9()).holds());
  CHECK(grs::check_square_criterion(5).holds());
  CHECK_THROWS_AS(grs::check_square_criterion(7), grs::PreconditionFailed);
}

TEST_CASE("PSL(2,25)") {
  auto g = grs::MatrixGroup::enumerate(grs::GroupSpec::psl2(25));
  CHECK(g.order() == 7800);
  auto p5 = g.order_p_classes(5);
  REQUIRE(p5.size() == 2);
  CHECK(p5[0].size == 312);
  CHECK(p5[1].size == 312);
}

TEST_CASE("PSL(3,3) against the shipped table") {
  const auto& g = psl3_3();
  CHECK(g.order() == 5616);
  CHECK(g.exponent() == 312);
  auto t = grs::load_table(grs::psl33_table_path());
  auto p3 = g.order_p_classes(3);
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].size == 104);
  CHECK(p3[1].size == 624);
  CHECK(t.find_class("a").class_size == 104);
  CHECK(t.find_class("b").class_size == 624);
  CHECK(t.find_class("a").centralizer_order == p3[0].centralizer_order);
  // chi = (fixed points on P^2(F_3)) - 1
  const auto& chi = t.find_char("chi");
  CHECK(grs::Cyclotomic(g.fixed_points(p3[0].representative) - 1) == chi.at("a"));
  CHECK(grs::Cyclotomic(g.fixed_points(p3[1].representative) - 1) == chi.at("b"));
  CHECK(g.fixed_points(0) >= 0);
}

TEST_CASE("cache round-trip and rejection") {
  auto dir = scratch_dir("cache");
  bool from_cache = true;
  auto a = grs::load_or_enumerate(grs::GroupSpec::psl2(9), dir, false, &from_cache);
  CHECK_FALSE(from_cache);
  auto b = grs::load_or_enumerate(grs::GroupSpec::psl2(9), dir, false, &from_cache);
  CHECK(from_cache);
  CHECK(a.order() == b.order());
  for (std::size_t i = 0; i < a.order(); ++i) CHECK(a.element(i) == b.element(i));

  auto path = dir / "psl2_q9.txt";
  REQUIRE(std::filesystem::exists(path));
  {
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto pos = text.rfind('\n', text.size() - 2);
    text = text.substr(0, pos + 1);  // drop one element
    std::ofstream out(path);
    out << text;
  }
  CHECK_THROWS_AS(grs::MatrixGroup::load(grs::GroupSpec::psl2(9), path), grs::ParseError);
  auto c = grs::load_or_enumerate(grs::GroupSpec::psl2(9), dir, false, &from_cache);
  CHECK_FALSE(from_cache);
  CHECK(c.order() == 360);
  std::filesystem::remove_all(dir);
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(grs::MatrixGroup::enumerate(grs::GroupSpec::psl2(121)), grs::TooLarge);
}
