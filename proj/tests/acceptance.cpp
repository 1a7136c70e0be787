// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "grs/char_table.hpp"
#include "grs/constructions.hpp"
#include "grs/data.hpp"
#include "grs/finite_field.hpp"
#include "grs/help.hpp"
#include "grs/oracle.hpp"
#include "grs/partial_aug.hpp"
#include "grs/patterns.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using grs::Cyclotomic;
using grs::Rational;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " --" << out.detail.str()
            << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << secs << "s)" << std::endl;
}

std::string set_string(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

Cyclotomic random_cyclotomic(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  std::vector<Rational> c(order);
  for (auto& x : c) x = grs::ratio(num(rng), den(rng));
  return Cyclotomic(order, c);
}

}  // namespace

int main() {
  const auto t33 = grs::load_table(grs::psl33_table_path());

  criterion(1, "HeLP scan for PSL(2,p^2) gives {(p+1)/2}", [](Outcome& o) {
    for (int p : {3, 5, 7, 11, 13}) {
      auto scan = grs::feasible_distributions(grs::psl2_slice(p), p, 2, {{}, 4});
      o.require(scan.feasible == std::vector<int>{(p + 1) / 2}, "p=" + std::to_string(p));
      for (const auto& c : scan.counts) {
        if (c.x == (p + 1) / 2) continue;
        const auto* w = scan.headline_witness(c.x);
        o.require(w && w->reason == "non-integral",
                  "non-integral witness p=" + std::to_string(p) + " x=" + std::to_string(c.x));
      }
      o.detail << " p=" << p << ":" << set_string(scan.feasible);
    }
  });

  criterion(2, "HeLP scan for PSL(3,3) is empty, witness (40-6x)/27", [&](Outcome& o) {
    auto scan = grs::feasible_distributions(t33, 3, 3, {{}, 4});
    o.require(scan.feasible.empty(), "feasible set empty");
    o.detail << " feasible " << set_string(scan.feasible) << ";";
    bool every_x_witnessed = true;
    for (const auto& c : scan.counts) {
      const auto* w = scan.headline_witness(c.x);
      every_x_witnessed &= w && w->reason == "non-integral";
    }
    o.require(every_x_witnessed, "a non-integral witness for every x");
    o.detail << " non-integral witness for every x: " << (every_x_witnessed ? "yes" : "no") << ";";

    // phi against the trivial character of U, from the scan and from the direct sum
    const auto& phi = t33.find_char("phi");
    bool matches_sum = true, matches_literal = true;
    std::vector<int> integral_at;
    for (int x = 0; x <= 13; ++x) {
      const int y = 13 - x;
      auto m = grs::multiplicity(phi, grs::prefix_assignment(3, 3, x, "a", "b"), {0, 0, 0});
      matches_sum &= m == Cyclotomic(grs::ratio(16 - 4 * x + 2 * y, 27));
      matches_literal &= m == Cyclotomic(grs::ratio(40 - 6 * x, 27));
      if (grs::is_integer(m.as_rational())) integral_at.push_back(x);
      for (const auto& w : scan.counts[x].witnesses)
        if (w.theta == "phi" && w.chi == std::vector<int>{0, 0, 0}) matches_sum &= w.multiplicity == m;
    }
    o.require(matches_sum, "phi/trivial multiplicity equals (16-4x+2y)/27");
    o.detail << " phi/trivial multiplicity = (16-4x+2y)/27 = (42-6x)/27: " << (matches_sum ? "yes" : "no")
             << "; integral at x in " << set_string(integral_at) << ";";
    o.require(matches_literal, "phi/trivial multiplicity equals (40-6x)/27 and is non-integral for every x");
    if (!matches_literal)
      o.detail << " (16-4x+2y) with y=13-x is 42-6x, not 40-6x; at x=7 this witness is 0 and x=7 is"
                  " excluded by non-trivial characters instead";
  });

  criterion(3, "PSL(2,p^2) constructions verify for every balanced pattern", [](Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    for (int p : {3, 5, 7}) {
      auto t = grs::psl2_slice(p);
      auto pats = grs::balanced_patterns(p);
      int verified = 0;
      for (const auto& pt : pats) {
        auto r = grs::verify_unit_group(grs::build_psl2_units(p, pt), t);
        const int half = (p * p - 1) / 2;
        bool ok = r.ok() && r.generators_commute && r.group_order == static_cast<std::size_t>(p * p) &&
                  r.generator_orders == std::vector<unsigned long>{static_cast<unsigned long>(p),
                                                                    static_cast<unsigned long>(p)} &&
                  r.all_integral && r.eps_counts.size() == 2 && r.eps_counts["(1,0)"] == half &&
                  r.eps_counts["(0,1)"] == half && r.recovered_pattern == pt;
        o.require(ok, "p=" + std::to_string(p) + " I=" + pt.to_string());
        verified += ok;
      }
      o.detail << " p=" << p << ": " << verified << "/" << pats.size();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 60.0, "runtime under a minute");
  });

  criterion(4, "I={1,2,4} at p=7 is elementwise conjugate but not subgroup conjugate", [](Outcome& o) {
    auto t = grs::psl2_slice(7);
    auto ug = grs::build_psl2_units(7, grs::parse_pattern(7, "1,2,4"));
    auto r = grs::verify_unit_group(ug, t);
    bool each = !r.elements.empty();
    for (const auto& e : r.elements) each &= e.eps && grs::mrsw_conjugate_to_group_element(*e.eps);
    o.require(each, "every element rationally conjugate to a group element");
    auto w = grs::valenti_search(grs::unit_profiles(ug), t, 7);
    o.require(!w.has_value(), "valenti_search returns none");
    o.detail << " elements conjugate: " << (each ? "all 48" : "no") << "; valenti: " << (w ? "witness" : "none");
    for (int p : {3, 5}) {
      auto tp = grs::psl2_slice(p);
      int found = 0, total = 0;
      for (const auto& pt : grs::balanced_patterns(p)) {
        auto wp = grs::valenti_search(grs::unit_profiles(grs::build_psl2_units(p, pt)), tp, p);
        ++total;
        found += wp.has_value() && wp->pattern == pt;
      }
      o.require(found == total, "witness for every pattern at p=" + std::to_string(p));
      o.detail << "; p=" << p << " witnesses " << found << "/" << total;
    }
  });

  criterion(5, "pattern gap counting", [](Outcome& o) {
    auto r11 = grs::gap_report(11);
    o.require(r11.counting_certifies && r11.balanced == 252 && r11.bound == 60, "252 > 60 at p=11");
    auto r7 = grs::gap_report(7);
    bool has = std::find(r7.missing.begin(), r7.missing.end(), grs::parse_pattern(7, "1,2,4")) != r7.missing.end();
    o.require(!r7.missing.empty() && has, "p=7 missing set contains 1,2,4");
    o.detail << " p=11: " << r11.balanced << " > " << r11.bound << "; p=7 missing " << r7.missing.size()
             << " incl. 1,2,4: " << (has ? "yes" : "no");
  });

  criterion(6, "PSL(3,3) construction", [&](Outcome& o) {
    auto ug = grs::build_psl33_units(t33);
    auto r = grs::verify_unit_group(ug, t33);
    o.require(r.ok(), "verify_unit_group");
    int checked = 0;
    for (const auto& e : r.elements) {
      if (!e.eps) {
        o.require(false, "eps defined");
        continue;
      }
      int i = e.exponents[0], j = e.exponents[1], k = e.exponents[2];
      std::string want = (j == 0 && k == 0) ? "(3,-2)" : (i + j + k) % 3 == 0 ? "(1,0)" : "(0,1)";
      o.require(e.eps->to_string() == want, "eps at " + std::to_string(i) + std::to_string(j) + std::to_string(k));
      ++checked;
    }
    const auto& alpha = ug.element({1, 0, 0}).unit;
    Rational tc = alpha.components.at("chi").trace(), tp = alpha.components.at("phi").trace();
    o.require(tc == 9 && tp == -8, "chi(alpha) = 9, phi(alpha) = -8");
    o.detail << " " << checked << " elements; chi(alpha)=" << grs::to_string(tc) << " phi(alpha)=" << grs::to_string(tp);
  });

  criterion(7, "character data integrity", [&](Outcome& o) {
    for (int p : {3, 5, 7, 11, 13})
      o.require(grs::validate_orthogonality(grs::psl2_slice(p)).ok(), "psl2 orthogonality p=" + std::to_string(p));
    o.require(grs::validate_orthogonality(t33).ok(), "psl33 orthogonality");

    auto g9 = grs::MatrixGroup::enumerate(grs::GroupSpec::psl2(9));
    auto t9 = grs::psl2_slice(3);
    auto ids = g9.class_ids();
    auto cls = g9.classes();
    const auto& cc = cls[ids[g9.index_of(g9.unipotent(1))]];
    int nonsquare = 1;
    while (g9.field().is_square(nonsquare)) ++nonsquare;
    const auto& cd = cls[ids[g9.index_of(g9.unipotent(nonsquare))]];
    o.require(static_cast<std::int64_t>(cc.size) == t9.find_class("c").class_size &&
                  static_cast<std::int64_t>(cd.size) == t9.find_class("d").class_size &&
                  cc.centralizer_order == t9.find_class("c").centralizer_order,
              "PSL(2,9) class sizes");

    const auto start = std::chrono::steady_clock::now();
    auto g33 = grs::MatrixGroup::enumerate(grs::GroupSpec::psl3(3));
    auto p3 = g33.order_p_classes(3);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= 30.0, "PSL(3,3) enumeration within 30s");
    o.require(p3.size() == 2 && static_cast<std::int64_t>(p3[0].size) == t33.find_class("a").class_size &&
                  static_cast<std::int64_t>(p3[1].size) == t33.find_class("b").class_size &&
                  p3[0].centralizer_order == t33.find_class("a").centralizer_order,
              "PSL(3,3) class sizes");
    o.detail << " PSL(2,9) c/d sizes " << cc.size << "/" << cd.size << "; PSL(3,3) a/b sizes "
             << (p3.size() == 2 ? std::to_string(p3[0].size) + "/" + std::to_string(p3[1].size) : "?");
  });

  criterion(8, "oracle coherence", [](Outcome& o) {
    auto g = grs::MatrixGroup::enumerate(grs::GroupSpec::psl2(9));
    auto p3 = g.order_p_classes(3);
    o.require(g.order() == 360 && p3.size() == 2 && p3[0].size == 40 && p3[1].size == 40, "|PSL(2,9)| = 360, 40 + 40");
    o.require(grs::check_square_criterion(g).holds(), "square criterion p=3");
    o.require(grs::check_square_criterion(5).holds(), "square criterion p=5");
    for (int p : {3, 5, 7, 11, 13}) {
      auto s = grs::square_lines(p);
      o.require(s.homogeneous && s.square_lines == (p + 1) / 2 && s.nonsquare_lines == (p + 1) / 2,
                "square_lines p=" + std::to_string(p));
    }
    o.detail << " order " << g.order() << ", order-3 classes " << p3.size();
  });

  criterion(9, "property suites", [&](Outcome& o) {
    std::mt19937 rng(2024);
    int axioms = 0;
    for (int trial = 0; trial < 200; ++trial) {
      int n = std::array<int, 5>{3, 4, 5, 7, 12}[trial % 5];
      auto a = random_cyclotomic(rng, n), b = random_cyclotomic(rng, n), c = random_cyclotomic(rng, 3);
      bool ok = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                a * (b + c) == a * b + a * c && a - a == Cyclotomic() && (a.conj()).conj() == a;
      if (!a.is_zero()) ok &= a * a.inverse() == Cyclotomic(1);
      o.require(ok, "field axioms");
      axioms += ok;
    }
    for (int n = 2; n <= 30; ++n) {
      Cyclotomic s;
      for (int k = 0; k < n; ++k) s += Cyclotomic::root(n, k);
      o.require(s.is_zero(), "sum of n-th roots n=" + std::to_string(n));
    }

    int roundtrips = 0;
    for (const auto& t : {grs::psl2_slice(7), t33}) {
      std::vector<std::string> support{t.classes[1].id, t.classes[2].id};
      for (int k = -3; k <= 3; ++k) {
        grs::AugVector v;
        v.support = support;
        v.values = {{support[0], grs::ratio(k, 5)}, {support[1], 1 - grs::ratio(k, 5)}};
        auto back = grs::invert_profile(t, grs::synthesize_profile(t, v), support);
        o.require(back == v, "invert_profile round-trip");
        roundtrips += back == v;
        // linearity: profile of a combination is the combination of profiles
        auto pa = grs::profile_of_class(t, support[0]), pb = grs::profile_of_class(t, support[1]);
        auto pv = grs::synthesize_profile(t, v);
        for (const auto& row : t.chars)
          if (row.name != t.trivial().name)
            o.require(pv.values.at(row.name) == Cyclotomic(grs::ratio(k, 5)) * pa.values.at(row.name) +
                                                    Cyclotomic(1 - grs::ratio(k, 5)) * pb.values.at(row.name),
                      "profile linearity");
      }
    }

    int sums = 0;
    for (int p : {3, 5, 7}) {
      auto t = grs::psl2_slice(p);
      grs::ElementaryAbelian u(p, 2);
      for (int x = 0; x <= p + 1; ++x) {
        auto a = grs::prefix_assignment(p, 2, x, "c", "d");
        for (const auto& theta : t.chars) {
          Cyclotomic total;
          for (int c = 0; c < u.order(); ++c) total += grs::multiplicity(theta, a, u.exponents(c));
          o.require(total == Cyclotomic(Rational(theta.degree)), "Fourier completeness");
          ++sums;
        }
      }
    }

    auto s2 = grs::feasible_distributions(grs::psl2_slice(7), 7, 2);
    bool sym2 = std::all_of(s2.counts.begin(), s2.counts.end(), [](const auto& c) { return c.symmetric; });
    auto s3 = grs::feasible_distributions(t33, 3, 3, {{}, 4});
    bool flagged3 = std::any_of(s3.counts.begin(), s3.counts.end(), [](const auto& c) { return !c.symmetric; });
    bool exhaustive3 = std::all_of(s3.counts.begin(), s3.counts.end(), [](const auto& c) { return c.mode == "exhaustive"; });
    o.require(sym2, "rank-2 assignments symmetric");
    o.require(flagged3 && exhaustive3, "rank-3 placement dependence detected and scanned exhaustively");
    o.detail << " axioms " << axioms << "/200; round-trips " << roundtrips << "; completeness sums " << sums
             << "; rank-2 symmetric " << (sym2 ? "yes" : "no") << ", rank-3 placement-dependent "
             << (flagged3 ? "yes" : "no");
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion(s) failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
