// grs: command-line front end for the character-table, HeLP, construction,
// pattern and group-oracle routines. Text goes to stdout; --json writes a
// RunReport.

#include "grs/char_table.hpp"
#include "grs/constructions.hpp"
#include "grs/data.hpp"
#include "grs/error.hpp"
#include "grs/finite_field.hpp"
#include "grs/help.hpp"
#include "grs/oracle.hpp"
#include "grs/patterns.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

struct Options {
  std::string group;
  int p = 0;
  int q = 0;
  std::string pattern;
  std::string json_path;
  unsigned jobs = 1;
  bool refresh = false;
  bool no_cache = false;
  bool verify = false;
  bool list_missing = false;
  std::vector<std::string> thetas;
};

class RunReport {
 public:
  RunReport(std::string command, json params) : command_(std::move(command)), params_(std::move(params)) {}

  bool check(const std::string& name, bool pass, const std::string& detail = {}) {
    verdicts_.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
    if (!pass) {
      all_pass_ = false;
      std::cout << "FAILED " << name;
      if (!detail.empty()) std::cout << ": " << detail;
      std::cout << "\n";
    }
    return pass;
  }
  void set_result(json r) { result_ = std::move(r); }
  bool all_pass() const { return all_pass_; }

  void write(const std::string& path, double seconds) const {
    if (path.empty()) return;
    json out{{"command", command_},
             {"parameters", params_},
             {"verdicts", verdicts_},
             {"all_pass", all_pass_},
             {"result", result_},
             {"wall_clock_seconds", seconds}};
    std::ofstream f(path);
    if (!f) throw grs::Error("Error: cannot write " + path);
    f << out.dump(2) << "\n";
  }

 private:
  std::string command_;
  json params_;
  json verdicts_ = json::array();
  json result_;
  bool all_pass_ = true;
};

std::string set_string(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

std::string vec_string(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += std::to_string(x);
  return s;
}

grs::TableSlice table_for(const Options& o) {
  if (o.group == "psl2") return grs::psl2_slice(o.p);
  if (o.group == "psl33") return grs::load_table(grs::psl33_table_path());
  throw CLI::ValidationError("group", "expected psl2 or psl33, got '" + o.group + "'");
}

void need_p(const Options& o) {
  if (o.group == "psl2" && o.p == 0) throw CLI::RequiredError("--p");
}

// chartab --------------------------------------------------------------------

void run_chartab(const Options& o, RunReport& rep) {
  need_p(o);
  auto t = table_for(o);
  std::cout << grs::format_table(t);
  auto orth = grs::validate_orthogonality(t);
  std::cout << "orthogonal: " << (orth.ok() ? "yes" : "no") << "\n";
  rep.check("column orthogonality", orth.ok());

  std::vector<std::string> basis, support;
  if (o.group == "psl2") {
    basis = {"eta"};
    support = {"c", "d"};
  } else {
    basis = {"chi", "phi"};
    support = {"a", "b"};
  }
  json rules = json::array();
  for (const auto& d : grs::decompose_on_support(t, basis, support)) {
    std::cout << "  " << d.row << " =";
    for (std::size_t i = 0; i < basis.size(); ++i) std::cout << (i ? " + " : " ") << d.coeffs[i] << "*" << basis[i];
    std::cout << " + (" << d.residual_value.to_string() << " on {" << support[0] << "," << support[1] << "})\n";
    rules.push_back({{"row", d.row},
                     {"coeffs", d.coeffs},
                     {"residual", d.residual_value.to_string()},
                     {"nonnegative", d.nonnegative}});
  }
  rep.set_result({{"table", grs::to_json(t)}, {"orthogonality", grs::to_json(orth)}, {"forced_rules", rules}});
}

// help-scan ------------------------------------------------------------------

void run_help_scan(const Options& o, RunReport& rep) {
  need_p(o);
  auto t = table_for(o);
  const int p = o.group == "psl2" ? o.p : 3;
  const int rank = o.group == "psl2" ? 2 : 3;
  auto scan = grs::feasible_distributions(t, p, rank, {o.thetas, o.jobs});
  std::cout << t.group << ": U = C_" << p << "^" << rank << ", " << scan.num_subgroups
            << " cyclic subgroups, classes " << scan.classes[0];
  if (scan.classes.size() > 1) std::cout << "/" << scan.classes[1];
  std::cout << "\n";
  for (const auto& c : scan.counts) {
    std::cout << "  x = " << c.x << ": " << (c.feasible ? "feasible" : "infeasible") << " (" << c.mode
              << (c.symmetric ? "" : ", placement-dependent") << ")";
    if (const auto* w = scan.headline_witness(c.x))
      std::cout << "  witness " << w->theta << ", chi=" << vec_string(w->chi) << ": "
                << grs::value_to_json(w->multiplicity).get<std::string>() << " " << w->reason;
    std::cout << "\n";
  }
  std::cout << "feasible: " << set_string(scan.feasible) << "\n";
  std::cout << "feasible (non-trivial characters only): " << set_string(scan.feasible_nontrivial_only) << "\n";
  for (const auto& c : scan.counts)
    if (!c.feasible && c.mode != "exhaustive")
      rep.check("witness for x = " + std::to_string(c.x), scan.headline_witness(c.x) != nullptr);
  rep.set_result(grs::to_json(scan));
}

// construct ------------------------------------------------------------------

void print_elements(const grs::UnitGroupReport& r) {
  for (const auto& e : r.elements) {
    std::cout << "  " << vec_string(e.exponents) << ":";
    for (const auto& [comp, tr] : e.traces) std::cout << " tr_" << comp << "=" << grs::to_string(tr);
    if (e.eps) std::cout << " eps=" << e.eps->to_string();
    else std::cout << " eps error: " << e.error;
    std::cout << "\n";
  }
  std::cout << "eps counts:";
  for (const auto& [k, n] : r.eps_counts) std::cout << " " << k << " x" << n;
  std::cout << "\n";
}

void report_unit_group(const grs::UnitGroupReport& r, RunReport& rep) {
  std::string orders;
  for (auto g : r.generator_orders) orders += (orders.empty() ? "" : ",") + std::to_string(g);
  std::cout << "generators commute: " << (r.generators_commute ? "yes" : "no") << ", orders " << orders
            << ", group order " << r.group_order << "\n";
  rep.check("generators commute", r.generators_commute);
  rep.check("faithful", r.faithful);
  rep.check("integral partial augmentations", r.all_integral);
}

void run_construct(const Options& o, RunReport& rep) {
  if (o.group == "psl2") {
    if (o.p == 0) throw CLI::RequiredError("--p");
    if (o.pattern.empty()) throw CLI::RequiredError("--pattern");
    auto t = grs::psl2_slice(o.p);
    auto pattern = grs::parse_pattern(o.p, o.pattern);
    auto ug = grs::build_psl2_units(o.p, pattern);
    std::cout << "U' = <u, v> in the eta component of Q PSL(2," << o.p * o.p << "), pattern " << pattern.to_string()
              << "\n";
    json result{{"label", ug.label}, {"pattern", pattern.to_string()}};
    if (o.verify) {
      auto r = grs::verify_unit_group(ug, t);
      print_elements(r);
      report_unit_group(r, rep);
      const int half = (o.p * o.p - 1) / 2;
      rep.check("eps (1,0) count", r.eps_counts.count("(1,0)") && r.eps_counts.at("(1,0)") == half);
      rep.check("eps (0,1) count", r.eps_counts.count("(0,1)") && r.eps_counts.at("(0,1)") == half);
      std::string recovered = r.recovered_pattern ? r.recovered_pattern->to_string() : "none";
      std::cout << "trace pattern: " << recovered << "\n";
      rep.check("trace pattern", r.recovered_pattern == pattern, "recovered " + recovered);
      bool each = true;
      for (const auto& e : r.elements) each &= e.conjugate_to_group_element;
      std::cout << "every element rationally conjugate to a group element: " << (each ? "yes" : "no") << "\n";
      result["report"] = grs::to_json(r);
      result["elements_conjugate_to_group_elements"] = each;
    }
    auto w = grs::valenti_search(grs::unit_profiles(ug), t, o.p);
    grs::Fp2 f(o.p);
    if (w) {
      std::cout << "valenti: u -> " << f.to_string(w->image_u) << ", v -> " << f.to_string(w->image_v)
                << " (pattern " << w->pattern.to_string() << ")\n";
      result["valenti"] = {{"image_u", f.to_string(w->image_u)},
                           {"image_v", f.to_string(w->image_v)},
                           {"pattern", w->pattern.to_string()}};
    } else {
      std::cout << "valenti: none (not rationally conjugate to a subgroup of the group)\n";
      result["valenti"] = nullptr;
    }
    rep.set_result(result);
    return;
  }
  if (o.group == "psl33") {
    auto t = grs::load_table(grs::psl33_table_path());
    auto ug = grs::build_psl33_units(t);
    std::cout << "U = <alpha, beta, gamma> in the chi and phi components of Q PSL(3,3)\n";
    json result{{"label", ug.label}};
    if (o.verify) {
      auto r = grs::verify_unit_group(ug, t);
      print_elements(r);
      report_unit_group(r, rep);
      bool eps_ok = true;
      for (const auto& e : r.elements) {
        if (!e.eps) {
          eps_ok = false;
          continue;
        }
        int i = e.exponents[0], j = e.exponents[1], k = e.exponents[2];
        std::string want = (j == 0 && k == 0) ? "(3,-2)" : (i + j + k) % 3 == 0 ? "(1,0)" : "(0,1)";
        if (e.eps->to_string() != want) {
          eps_ok = false;
          rep.check("eps of " + vec_string(e.exponents), false, e.eps->to_string() + " != " + want);
        }
      }
      rep.check("eps pattern", eps_ok);
      result["report"] = grs::to_json(r);
    }
    rep.set_result(result);
    return;
  }
  throw CLI::ValidationError("group", "expected psl2 or psl33, got '" + o.group + "'");
}

// patterns -------------------------------------------------------------------

void run_patterns(const Options& o, RunReport& rep) {
  if (o.p == 0) throw CLI::RequiredError("--p");
  auto r = grs::gap_report(o.p);
  std::cout << "p = " << o.p << ": " << r.balanced << " balanced patterns, " << r.realizable
            << " realized, at most " << r.bound << " realizable\n";
  std::cout << "counting certifies a gap: " << (r.counting_certifies ? "yes" : "no") << "\n";
  std::cout << "missing: " << r.missing.size() << "\n";
  if (o.list_missing)
    for (const auto& m : r.missing) std::cout << "  " << m.to_string() << "\n";
  rep.check("normalized search matches full search", r.normalized_matches_full);
  rep.set_result(grs::to_json(r, o.list_missing));
}

// oracle ---------------------------------------------------------------------

grs::MatrixGroup oracle_group(const grs::GroupSpec& spec, const Options& o, bool* from_cache) {
  if (o.no_cache) {
    *from_cache = false;
    return grs::MatrixGroup::enumerate(spec);
  }
  return grs::load_or_enumerate(spec, grs::oracle_cache_dir(), o.refresh, from_cache);
}

void run_oracle(const Options& o, RunReport& rep) {
  grs::GroupSpec spec;
  if (o.group == "psl2") {
    if (o.q == 0) throw CLI::RequiredError("--q");
    spec = grs::GroupSpec::psl2(o.q);
  } else if (o.group == "psl3" || o.group == "psl33") {
    spec = grs::GroupSpec::psl3(o.q == 0 ? 3 : o.q);
  } else {
    throw CLI::ValidationError("group", "expected psl2 or psl3, got '" + o.group + "'");
  }
  bool from_cache = false;
  auto g = oracle_group(spec, o, &from_cache);
  auto classes = g.classes();
  std::cout << g.spec().label() << ": order " << g.order() << (from_cache ? " (cached)" : "") << ", "
            << classes.size() << " classes, exponent " << g.exponent() << "\n";
  std::cout << "  order   size  centralizer\n";
  for (const auto& c : classes)
    std::cout << "  " << std::setw(5) << c.element_order << " " << std::setw(6) << c.size << " " << std::setw(12)
              << c.centralizer_order << "\n";
  rep.check("order matches formula", static_cast<std::int64_t>(g.order()) == spec.formula_order());
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size;
  rep.check("class sizes sum to the order", total == g.order());
  json result = grs::to_json(g, classes);
  result["from_cache"] = from_cache;
  rep.set_result(result);
}

// invariants -----------------------------------------------------------------

void run_invariants(const Options& o, RunReport& rep) {
  json result = json::object();
  for (int p : {3, 5, 7, 11, 13}) {
    bool ok = grs::validate_orthogonality(grs::psl2_slice(p)).ok();
    rep.check("orthogonality psl2 p=" + std::to_string(p), ok);
    auto sl = grs::square_lines(p);
    bool lines = sl.homogeneous && sl.square_lines == (p + 1) / 2 && sl.nonsquare_lines == (p + 1) / 2;
    rep.check("square lines p=" + std::to_string(p), lines);
  }
  auto t33 = grs::load_table(grs::psl33_table_path());
  rep.check("orthogonality psl33", grs::validate_orthogonality(t33).ok());

  Options cached = o;
  for (auto spec : {grs::GroupSpec::psl2(9), grs::GroupSpec::psl2(25), grs::GroupSpec::psl3(3)}) {
    bool from_cache = false;
    auto g = oracle_group(spec, cached, &from_cache);
    rep.check("oracle order " + spec.label(), static_cast<std::int64_t>(g.order()) == spec.formula_order());
    auto pcls = g.order_p_classes(spec.kind == grs::GroupKind::PSL2 ? (spec.q == 9 ? 3 : 5) : 3);
    bool sizes = pcls.size() == 2;
    if (sizes && spec.kind == grs::GroupKind::PSL2) {
      auto t = grs::psl2_slice(spec.q == 9 ? 3 : 5);
      for (int k = 0; k < 2; ++k)
        sizes &= static_cast<std::int64_t>(pcls[k].size) == t.find_class(k ? "d" : "c").class_size &&
                 pcls[k].centralizer_order == t.find_class(k ? "d" : "c").centralizer_order;
      rep.check("square criterion " + spec.label(), grs::check_square_criterion(g).holds());
    } else if (sizes) {
      sizes = static_cast<std::int64_t>(pcls[0].size) == t33.find_class("a").class_size &&
              static_cast<std::int64_t>(pcls[1].size) == t33.find_class("b").class_size;
    }
    rep.check("order-p class sizes " + spec.label(), sizes);
  }

  for (int p : {3, 5, 7}) {
    auto t = grs::psl2_slice(p);
    auto realized = grs::group_patterns(p);
    bool coherent = true;
    for (const auto& pt : grs::balanced_patterns(p)) {
      auto ug = grs::build_psl2_units(p, pt);
      auto w = grs::valenti_search(grs::unit_profiles(ug), t, p);
      bool in = std::find(realized.begin(), realized.end(), pt) != realized.end();
      coherent &= w.has_value() == in && (!w || w->pattern == pt);
    }
    rep.check("pattern/valenti coherence p=" + std::to_string(p), coherent);
  }
  for (int p : {3, 5, 7, 11, 13}) {
    auto scan = grs::feasible_distributions(grs::psl2_slice(p), p, 2, {{}, o.jobs});
    rep.check("help-scan psl2 p=" + std::to_string(p), scan.feasible == std::vector<int>{(p + 1) / 2},
              set_string(scan.feasible));
  }
  std::cout << (rep.all_pass() ? "all invariants hold" : "invariant failures") << "\n";
  rep.set_result(result);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact HeLP, construction and pattern computations for PSL(2,p^2) and PSL(3,3)"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", o.json_path, "Write a RunReport to this path");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  };
  auto add_group = [&](CLI::App* sub, bool required) {
    auto* pos = sub->add_option("target", o.group, "Group: psl2, psl33 (psl3 for oracle)");
    auto* flag = sub->add_option("--group", o.group, "Group");
    pos->excludes(flag);
    if (required) sub->callback([&, sub] {
      if (o.group.empty()) throw CLI::RequiredError("group");
    });
  };

  auto* chartab = app.add_subcommand("chartab", "Print and validate a character table slice");
  add_group(chartab, true);
  chartab->add_option("--p", o.p, "Prime p, for PSL(2,p^2)");
  add_common(chartab);

  auto* scan = app.add_subcommand("help-scan", "HeLP scan over class distributions");
  add_group(scan, true);
  scan->add_option("--p", o.p, "Prime p, for PSL(2,p^2)");
  scan->add_option("--theta", o.thetas, "Restrict to these character rows");
  add_common(scan);

  auto* construct = app.add_subcommand("construct", "Build the explicit unit subgroups");
  add_group(construct, true);
  construct->add_option("--p", o.p, "Prime p, for PSL(2,p^2)");
  construct->add_option("--pattern", o.pattern, "Balanced pattern, e.g. 1,2,4");
  construct->add_flag("--verify", o.verify, "Verify group structure and partial augmentations");
  add_common(construct);

  auto* patterns = app.add_subcommand("patterns", "Balanced versus realizable patterns");
  patterns->add_option("--p", o.p, "Odd prime p")->required();
  patterns->add_flag("--list-missing", o.list_missing, "List every unrealizable pattern");
  add_common(patterns);

  auto* oracle = app.add_subcommand("oracle", "Enumerate a matrix group and its classes");
  add_group(oracle, true);
  oracle->add_option("--q", o.q, "Field size");
  oracle->add_flag("--refresh", o.refresh, "Ignore any cached enumeration");
  oracle->add_flag("--no-cache", o.no_cache, "Neither read nor write the cache");
  add_common(oracle);

  auto* invariants = app.add_subcommand("invariants", "Cross-module coherence suite");
  invariants->add_flag("--refresh", o.refresh, "Ignore cached enumerations");
  add_common(invariants);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);
  json params{{"group", o.group}, {"p", o.p},           {"q", o.q},           {"pattern", o.pattern},
              {"jobs", o.jobs},   {"refresh", o.refresh}, {"verify", o.verify}, {"thetas", o.thetas}};
  RunReport rep(echo, params);

  try {
    if (*chartab) run_chartab(o, rep);
    else if (*scan) run_help_scan(o, rep);
    else if (*construct) run_construct(o, rep);
    else if (*patterns) run_patterns(o, rep);
    else if (*oracle) run_oracle(o, rep);
    else if (*invariants) run_invariants(o, rep);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const grs::BadPattern& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const grs::NotPrime& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const grs::TooLarge& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  try {
    rep.write(o.json_path, seconds);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return rep.all_pass() ? 0 : 1;
}
