#include "grs/constructions.hpp"

#include "grs/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace grs {

namespace {

constexpr int kMaxPrime = 13;
constexpr int kMaxRank = 3;

std::vector<QMatrix> powers_of(const QMatrix& a, int p) {
  std::vector<QMatrix> out{QMatrix::identity(a.dim())};
  for (int k = 1; k < p; ++k) out.push_back(out.back() * a);
  return out;
}

BlockDiag from_exponents(const std::vector<QMatrix>& powers, const std::vector<int>& exps, int p) {
  std::vector<QMatrix> blocks;
  blocks.reserve(exps.size());
  for (int e : exps) blocks.push_back(powers[((e % p) + p) % p]);
  return BlockDiag(std::move(blocks));
}

std::string component_key(const BlockUnit& u) {
  std::string key;
  for (const auto& [name, bd] : u.components) {
    key += name + ":";
    for (const auto& m : bd.blocks())
      for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) key += m(r, c).get_str() + ",";
    key += ";";
  }
  return key;
}

// Materializes all products of generator powers and fills forced values.
void materialize(UnitGroup& ug, const TableSlice& table) {
  const int p = ug.p;
  int total = 1;
  for (int k = 0; k < ug.rank; ++k) total *= p;

  std::vector<std::vector<BlockUnit>> gen_powers(ug.rank);
  for (int k = 0; k < ug.rank; ++k) {
    BlockUnit acc;
    for (const auto& [name, bd] : ug.generators[k].components) acc.components[name] = BlockDiag::identity(bd.signature());
    for (int e = 0; e < p; ++e) {
      gen_powers[k].push_back(acc);
      for (auto& [name, bd] : acc.components) bd = bd * ug.generators[k].components.at(name);
    }
  }

  for (int idx = 0; idx < total; ++idx) {
    std::vector<int> exps(ug.rank);
    for (int k = ug.rank - 1, rest = idx; k >= 0; --k, rest /= p) exps[k] = rest % p;
    BlockUnit unit = gen_powers[0][exps[0]];
    for (int k = 1; k < ug.rank; ++k)
      for (auto& [name, bd] : unit.components) bd = bd * gen_powers[k][exps[k]].components.at(name);

    const bool identity = std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    for (const auto& rule : ug.forced_rules) {
      if (identity) {
        unit.forced_values[rule.row] = Cyclotomic(Rational(table.find_char(rule.row).degree));
        continue;
      }
      Cyclotomic v = rule.residual_value;
      for (std::size_t i = 0; i < ug.distinguished.size(); ++i)
        v += Cyclotomic(Rational(rule.coeffs[i])) * Cyclotomic(unit.components.at(ug.distinguished[i]).trace());
      unit.forced_values[rule.row] = v;
    }
    ug.elements.push_back({exps, std::move(unit)});
  }
}

void attach_forced_rules(UnitGroup& ug, const TableSlice& table) {
  auto rules = decompose_on_support(table, ug.distinguished, ug.support);
  for (const auto& row : table.chars) {
    if (std::find(ug.distinguished.begin(), ug.distinguished.end(), row.name) != ug.distinguished.end()) continue;
    auto it = std::find_if(rules.begin(), rules.end(), [&](const auto& r) { return r.row == row.name; });
    if (it == rules.end())
      throw ValidationError("row " + row.name + " is not determined by the distinguished components");
    ug.forced_rules.push_back(*it);
  }
}

}  // namespace

const UnitElement& UnitGroup::element(const std::vector<int>& exponents) const {
  for (const auto& e : elements)
    if (e.exponents == exponents) return e;
  throw PreconditionFailed("no element with these exponents");
}

UnitGroup build_psl2_units(int p, const Pattern& pattern) {
  if (!is_prime(p) || p == 2) throw NotPrime(std::to_string(p) + " is not an odd prime");
  if (p > kMaxPrime) throw TooLarge("unit groups are materialized only for p <= 13");
  if (pattern.p != p) throw BadPattern("pattern is for p = " + std::to_string(pattern.p));
  if (!pattern.balanced()) throw BadPattern("pattern must have exactly (p-1)/2 members");
  std::set<int> seen;
  for (int i : pattern.members) {
    if (i < 1 || i > p - 1) throw BadPattern(std::to_string(i) + " is outside 1.." + std::to_string(p - 1));
    if (!seen.insert(i).second) throw BadPattern("repeated member " + std::to_string(i));
  }

  TableSlice table = psl2_slice(p);
  auto powers = powers_of(companion_cyclotomic(p), p);
  QMatrix one = QMatrix::identity(1);

  std::vector<QMatrix> u_blocks{one, powers[0]};
  for (int i : pattern.members) u_blocks.push_back(powers[(p - i) % p]);
  std::vector<QMatrix> v_blocks{one};
  for (int k = 0; k < (p + 1) / 2; ++k) v_blocks.push_back(powers[1]);

  UnitGroup ug;
  ug.label = "psl2";
  ug.p = p;
  ug.rank = 2;
  ug.support = {"c", "d"};
  ug.distinguished = {"eta"};
  ug.pattern = pattern;
  ug.generators.push_back({{{"eta", BlockDiag(std::move(u_blocks))}}, {}});
  ug.generators.push_back({{{"eta", BlockDiag(std::move(v_blocks))}}, {}});
  attach_forced_rules(ug, table);
  materialize(ug, table);
  return ug;
}

UnitGroup build_psl33_units(const TableSlice& table) {
  auto powers = powers_of(companion_cyclotomic(3), 3);
  const int p = 3;

  UnitGroup ug;
  ug.label = "psl33";
  ug.p = p;
  ug.rank = 3;
  ug.support = {"a", "b"};
  ug.distinguished = {"chi", "phi"};

  // Exponents of A in each 2x2 block.
  const std::vector<std::vector<int>> chi_blocks = {
      {0, 0, 0, 0, 0, 1},  // alpha
      {0, 0, 1, 1, 1, 1},  // beta
      {0, 1, 1, 0, 2, 1},  // gamma
  };
  const std::vector<std::vector<int>> phi_blocks = {
      {1, 1, 1, 1, 1, 1, 1, 1},
      {0, 0, 0, 1, 1, 2, 2, 2},
      {0, 1, 2, 0, 2, 0, 1, 2},
  };
  for (int g = 0; g < 3; ++g) {
    BlockUnit unit;
    unit.components["chi"] = from_exponents(powers, chi_blocks[g], p);
    unit.components["phi"] = from_exponents(powers, phi_blocks[g], p);
    ug.generators.push_back(std::move(unit));
  }
  if (table.find_char("chi").degree != 12 || table.find_char("phi").degree != 16)
    throw ValidationError("table rows chi/phi do not have degrees 12/16");
  table.find_class("a");
  table.find_class("b");
  attach_forced_rules(ug, table);
  materialize(ug, table);
  return ug;
}

CharProfile profile_of(const UnitGroup& ug, const UnitElement& e) {
  CharProfile out;
  for (const auto& name : ug.distinguished) out.values[name] = Cyclotomic(e.unit.components.at(name).trace());
  for (const auto& [name, v] : e.unit.forced_values) out.values[name] = v;
  return out;
}

bool UnitGroupReport::ok() const {
  return generators_commute && faithful && all_integral &&
         std::all_of(elements.begin(), elements.end(), [](const auto& e) { return e.eps.has_value(); });
}

UnitGroupReport verify_unit_group(const UnitGroup& ug, const TableSlice& table) {
  UnitGroupReport r;
  r.generators_commute = true;
  for (std::size_t i = 0; i < ug.generators.size(); ++i)
    for (std::size_t j = i + 1; j < ug.generators.size(); ++j)
      for (const auto& [name, bd] : ug.generators[i].components) {
        const auto& other = ug.generators[j].components.at(name);
        if (!(bd * other == other * bd)) r.generators_commute = false;
      }

  for (const auto& gen : ug.generators) {
    unsigned long order = 1;
    for (const auto& [name, bd] : gen.components) {
      unsigned long k = 1;
      BlockDiag acc = bd;
      while (!acc.is_identity() && k <= static_cast<unsigned long>(ug.p)) {
        acc = acc * bd;
        ++k;
      }
      order = std::lcm(order, acc.is_identity() ? k : 0UL);
    }
    r.generator_orders.push_back(order);
  }

  std::set<std::string> distinct;
  for (const auto& e : ug.elements) distinct.insert(component_key(e.unit));
  r.group_order = distinct.size();
  std::size_t expected = 1;
  for (int k = 0; k < ug.rank; ++k) expected *= static_cast<std::size_t>(ug.p);
  r.faithful = r.group_order == expected && ug.elements.size() == expected &&
               std::all_of(r.generator_orders.begin(), r.generator_orders.end(),
                           [&](auto o) { return o == static_cast<unsigned long>(ug.p); });

  r.all_integral = true;
  for (const auto& e : ug.elements) {
    if (std::all_of(e.exponents.begin(), e.exponents.end(), [](int v) { return v == 0; })) continue;
    ElementReport er;
    er.exponents = e.exponents;
    for (const auto& name : ug.distinguished) er.traces[name] = e.unit.components.at(name).trace();
    try {
      er.eps = invert_profile(table, profile_of(ug, e), ug.support);
      er.integral = er.eps->integral();
      er.conjugate_to_group_element = mrsw_conjugate_to_group_element(*er.eps);
      ++r.eps_counts[er.eps->to_string()];
    } catch (const Error& err) {
      er.error = err.what();
    }
    if (!er.integral) r.all_integral = false;
    r.elements.push_back(std::move(er));
  }
  if (ug.label == "psl2") r.recovered_pattern = recover_pattern(ug, table);
  return r;
}

Pattern recover_pattern(const UnitGroup& ug, const TableSlice& table) {
  const Cyclotomic eta_c = table.find_char("eta").at("c");
  Pattern pat{ug.p, {}};
  for (int j = 1; j < ug.p; ++j) {
    const auto& e = ug.element({1, j});
    if (Cyclotomic(e.unit.components.at("eta").trace()) == eta_c) pat.members.push_back(j);
  }
  return pat;
}

std::map<std::vector<int>, CharProfile> unit_profiles(const UnitGroup& ug) {
  std::map<std::vector<int>, CharProfile> out;
  for (const auto& e : ug.elements) out[e.exponents] = profile_of(ug, e);
  return out;
}

std::optional<ValentiWitness> valenti_search(const std::map<std::vector<int>, CharProfile>& unit_profiles,
                                             const TableSlice& table, int p) {
  Fp2 field(p);
  // Class labels: 0 identity, 1 square ("c"), 2 non-square ("d").
  const std::vector<CharProfile> class_profiles = {profile_of_class(table, table.identity_class()),
                                                   profile_of_class(table, "c"), profile_of_class(table, "d")};
  std::map<std::vector<int>, int> unit_label;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      auto it = unit_profiles.find({a, b});
      if (it == unit_profiles.end()) throw PreconditionFailed("missing profile for an element of U");
      auto pos = std::find(class_profiles.begin(), class_profiles.end(), it->second);
      // A profile no element of P has rules out every isomorphism.
      if (pos == class_profiles.end()) return std::nullopt;
      unit_label[{a, b}] = static_cast<int>(pos - class_profiles.begin());
    }

  auto label = [&](FqElement x) { return x.is_zero() ? 0 : (field.is_square(x) ? 1 : 2); };
  auto nonzero = field.nonzero_elements();
  for (const auto& lambda : nonzero) {
    for (const auto& mu : nonzero) {
      bool dependent = false;
      for (int k = 1; k < p && !dependent; ++k) dependent = field.scale(k, lambda) == mu;
      if (dependent) continue;
      bool match = true;
      for (int a = 0; a < p && match; ++a)
        for (int b = 0; b < p && match; ++b)
          match = label(field.add(field.scale(a, lambda), field.scale(b, mu))) == unit_label.at({a, b});
      if (!match) continue;
      ValentiWitness w{lambda, mu, {p, {}}};
      for (int i = 1; i < p; ++i)
        if (label(field.add(lambda, field.scale(i, mu))) == label(lambda)) w.pattern.members.push_back(i);
      return w;
    }
  }
  return std::nullopt;
}

nlohmann::json to_json(const UnitGroupReport& r) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : r.elements) {
    nlohmann::json traces = nlohmann::json::object();
    for (const auto& [name, t] : e.traces) traces[name] = to_string(t);
    nlohmann::json item = {{"exponents", e.exponents},
                           {"traces", traces},
                           {"integral", e.integral},
                           {"conjugate_to_group_element", e.conjugate_to_group_element}};
    if (e.eps) item["eps"] = to_json(*e.eps);
    if (!e.error.empty()) item["error"] = e.error;
    elements.push_back(std::move(item));
  }
  nlohmann::json out = {{"generators_commute", r.generators_commute},
                        {"generator_orders", r.generator_orders},
                        {"group_order", r.group_order},
                        {"faithful", r.faithful},
                        {"all_integral", r.all_integral},
                        {"eps_counts", r.eps_counts},
                        {"elements", elements},
                        {"ok", r.ok()}};
  if (r.recovered_pattern) out["recovered_pattern"] = r.recovered_pattern->to_string();
  return out;
}

}  // namespace grs
