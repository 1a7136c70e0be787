#include "grs/char_table.hpp"

#include "grs/error.hpp"
#include "grs/finite_field.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace grs {

const Cyclotomic& CharSlice::at(const std::string& class_id) const {
  auto it = values.find(class_id);
  if (it == values.end())
    throw UnassignedClass("character " + name + " has no value at class " + class_id);
  return it->second;
}

const ClassInfo& TableSlice::find_class(const std::string& id) const {
  for (const auto& c : classes)
    if (c.id == id) return c;
  throw UnassignedClass("no class '" + id + "' in " + group);
}

const CharSlice& TableSlice::find_char(const std::string& name) const {
  for (const auto& c : chars)
    if (c.name == name) return c;
  throw PreconditionFailed("no character '" + name + "' in " + group);
}

bool TableSlice::has_char(const std::string& name) const {
  return std::any_of(chars.begin(), chars.end(), [&](const auto& c) { return c.name == name; });
}

const CharSlice& TableSlice::trivial() const {
  for (const auto& c : chars) {
    if (c.degree != 1) continue;
    bool all_one = std::all_of(c.values.begin(), c.values.end(),
                               [](const auto& kv) { return kv.second == Cyclotomic(1); });
    if (all_one) return c;
  }
  throw ValidationError(group + " has no trivial character row");
}

TableSlice psl2_slice(int p) {
  if (!is_prime(p) || p == 2) throw NotPrime(std::to_string(p) + " is not an odd prime");
  const std::int64_t q = static_cast<std::int64_t>(p) * p;
  const std::int64_t order = q * (q * q - 1) / 2;

  TableSlice t;
  t.group = "PSL(2," + std::to_string(q) + ")";
  t.group_order = order;
  t.classes = {
      {"1", 1, 1, order},
      {"c", p, (q * q - 1) / 2, q},
      {"d", p, (q * q - 1) / 2, q},
  };

  auto row = [](std::string name, std::int64_t deg, Rational vc, Rational vd) {
    CharSlice c;
    c.name = std::move(name);
    c.degree = deg;
    c.values = {{"1", Cyclotomic(Rational(deg))}, {"c", Cyclotomic(vc)}, {"d", Cyclotomic(vd)}};
    return c;
  };

  t.chars.push_back(row("1", 1, 1, 1));
  t.chars.push_back(row("St", q, 0, 0));
  for (std::int64_t k = 1; k <= (q - 5) / 4; ++k) t.chars.push_back(row("ps" + std::to_string(k), q + 1, 1, 1));
  for (std::int64_t k = 1; k <= (q - 1) / 4; ++k) t.chars.push_back(row("ds" + std::to_string(k), q - 1, -1, -1));
  const Rational plus = ratio(p + 1, 2);
  const Rational minus = ratio(1 - p, 2);
  t.chars.push_back(row("eta", (q + 1) / 2, plus, minus));
  t.chars.push_back(row("eta~", (q + 1) / 2, minus, plus));

  t.notes.push_back("eta has degree (p^2+1)/2 = " + std::to_string((q + 1) / 2) +
                    "; a printed value of (p^2-1)/2 is inconsistent with the inner-product "
                    "expansion and with column orthogonality");
  return t;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::int64_t parse_int(const std::string& s, int line_no) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
}

}  // namespace

TableSlice parse_table(const std::string& text) {
  TableSlice t;
  bool have_header = false;
  std::istringstream in(text);
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "group") {
      if (tok.size() != 4 || tok[2] != "order") throw ParseError(where + "expected 'group <name> order <N>'");
      if (have_header) throw ParseError(where + "duplicate group header");
      t.group = tok[1];
      t.group_order = parse_int(tok[3], line_no);
      if (t.group_order <= 0) throw ParseError(where + "group order must be positive");
      have_header = true;
    } else if (tok[0] == "class") {
      if (!have_header) throw ParseError(where + "class before group header");
      if (!t.chars.empty()) throw ParseError(where + "class after char rows");
      if (tok.size() != 4) throw ParseError(where + "expected 'class <id> <element_order> <class_size>'");
      ClassInfo c;
      c.id = tok[1];
      c.element_order = static_cast<int>(parse_int(tok[2], line_no));
      c.class_size = parse_int(tok[3], line_no);
      if (c.element_order <= 0 || c.class_size <= 0) throw ParseError(where + "class data must be positive");
      if (t.group_order % c.class_size != 0)
        throw ValidationError(where + "class size does not divide the group order");
      c.centralizer_order = t.group_order / c.class_size;
      for (const auto& other : t.classes)
        if (other.id == c.id) throw ParseError(where + "duplicate class '" + c.id + "'");
      t.classes.push_back(std::move(c));
    } else if (tok[0] == "char") {
      if (t.classes.empty()) throw ParseError(where + "char before class lines");
      if (tok.size() != 3 + t.classes.size())
        throw ParseError(where + "expected a value for each of the " + std::to_string(t.classes.size()) +
                         " classes");
      CharSlice c;
      c.name = tok[1];
      c.degree = parse_int(tok[2], line_no);
      if (c.degree <= 0) throw ParseError(where + "degree must be positive");
      for (std::size_t i = 0; i < t.classes.size(); ++i) {
        try {
          c.values[t.classes[i].id] = Cyclotomic(parse_rational(tok[3 + i]));
        } catch (const ParseError& e) {
          throw ParseError(where + e.what());
        }
      }
      if (t.has_char(c.name)) throw ParseError(where + "duplicate character '" + c.name + "'");
      t.chars.push_back(std::move(c));
    } else {
      throw ParseError(where + "unknown record '" + tok[0] + "'");
    }
  }
  if (!have_header) throw ParseError("missing group header");
  if (t.classes.empty() || t.classes.front().class_size != 1 || t.classes.front().element_order != 1)
    throw ValidationError("first class must be the identity");
  for (const auto& c : t.chars)
    if (c.at(t.identity_class()) != Cyclotomic(Rational(c.degree)))
      throw ValidationError("character " + c.name + ": value at identity differs from degree");
  auto report = validate_orthogonality(t);
  if (!report.ok()) {
    for (const auto& e : report.entries)
      if (!e.ok)
        throw ValidationError("orthogonality fails at (" + e.x + "," + e.y + "): got " + e.computed.to_string() +
                              ", expected " + e.expected.to_string());
  }
  return t;
}

TableSlice load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

bool OrthogonalityReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok; });
}

OrthogonalityReport validate_orthogonality(const TableSlice& t) {
  OrthogonalityReport report;
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    for (std::size_t j = i; j < t.classes.size(); ++j) {
      const auto& x = t.classes[i];
      const auto& y = t.classes[j];
      Cyclotomic sum;
      for (const auto& row : t.chars) sum += row.at(x.id) * row.at(y.id).conj();
      Cyclotomic expected = i == j ? Cyclotomic(Rational(x.centralizer_order)) : Cyclotomic();
      report.entries.push_back({x.id, y.id, sum, expected, sum == expected});
    }
  }
  return report;
}

std::vector<RowDecomposition> decompose_on_support(const TableSlice& t,
                                                   const std::vector<std::string>& basis,
                                                   const std::vector<std::string>& support) {
  std::vector<const CharSlice*> base;
  for (const auto& name : basis) base.push_back(&t.find_char(name));
  std::int64_t min_deg = 1;
  if (!base.empty()) {
    min_deg = base.front()->degree;
    for (auto* b : base) min_deg = std::min(min_deg, b->degree);
  }

  std::vector<RowDecomposition> out;
  for (const auto& row : t.chars) {
    const std::int64_t bound = row.degree / min_deg + 2;
    std::optional<RowDecomposition> best;
    auto weight = [](const RowDecomposition& d) {
      std::int64_t w = 0;
      for (auto c : d.coeffs) w += c < 0 ? -c : c;
      return w;
    };
    auto better = [&](const RowDecomposition& a, const RowDecomposition& b) {
      if (a.nonnegative != b.nonnegative) return a.nonnegative;
      return weight(a) < weight(b);
    };

    std::vector<std::int64_t> coeffs(base.size(), -bound);
    std::function<void(std::size_t)> search = [&](std::size_t k) {
      if (k < base.size()) {
        for (std::int64_t c = -bound; c <= bound; ++c) {
          coeffs[k] = c;
          search(k + 1);
        }
        return;
      }
      std::optional<Cyclotomic> common;
      for (const auto& cls : support) {
        Cyclotomic r = row.at(cls);
        for (std::size_t i = 0; i < base.size(); ++i) r -= Cyclotomic(Rational(coeffs[i])) * base[i]->at(cls);
        if (common && !(*common == r)) return;
        common = r;
      }
      RowDecomposition d;
      d.row = row.name;
      d.coeffs = coeffs;
      d.residual_value = common.value_or(Cyclotomic());
      Cyclotomic deg(Rational(row.degree));
      for (std::size_t i = 0; i < base.size(); ++i) deg -= Cyclotomic(Rational(coeffs[i] * base[i]->degree));
      d.residual_degree = deg;
      d.nonnegative = std::all_of(coeffs.begin(), coeffs.end(), [](auto c) { return c >= 0; });
      if (!best || better(d, *best)) best = d;
    };
    search(0);
    if (best) out.push_back(*best);
  }
  return out;
}

nlohmann::json to_json(const TableSlice& t) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : t.classes)
    classes.push_back({{"id", c.id},
                       {"element_order", c.element_order},
                       {"class_size", c.class_size},
                       {"centralizer_order", c.centralizer_order}});
  nlohmann::json chars = nlohmann::json::array();
  for (const auto& c : t.chars) {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& cls : t.classes) values[cls.id] = value_to_json(c.at(cls.id));
    chars.push_back({{"name", c.name}, {"degree", c.degree}, {"values", values}});
  }
  return {{"group", t.group},
          {"group_order", t.group_order},
          {"classes", classes},
          {"chars", chars},
          {"notes", t.notes}};
}

nlohmann::json to_json(const OrthogonalityReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"x", e.x},
                       {"y", e.y},
                       {"computed", value_to_json(e.computed)},
                       {"expected", value_to_json(e.expected)},
                       {"ok", e.ok}});
  return {{"ok", r.ok()}, {"entries", entries}};
}

std::string format_table(const TableSlice& t) {
  std::ostringstream os;
  os << t.group << "  |G| = " << t.group_order << "\n";
  os << "class  order  size  |C(x)|\n";
  for (const auto& c : t.classes)
    os << "  " << c.id << "  " << c.element_order << "  " << c.class_size << "  " << c.centralizer_order << "\n";
  for (const auto& c : t.chars) {
    os << "  " << c.name << ":";
    for (const auto& cls : t.classes) os << " " << c.at(cls.id).to_string();
    os << "\n";
  }
  return os.str();
}

}  // namespace grs
