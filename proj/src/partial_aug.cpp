#include "grs/partial_aug.hpp"

#include "grs/error.hpp"

#include <algorithm>
#include <sstream>

namespace grs {

Rational AugVector::at(const std::string& class_id) const {
  auto it = values.find(class_id);
  return it == values.end() ? Rational(0) : it->second;
}

Rational AugVector::sum() const {
  Rational s = 0;
  for (const auto& [id, v] : values) s += v;
  return s;
}

bool AugVector::integral() const {
  return std::all_of(values.begin(), values.end(), [](const auto& kv) { return is_integer(kv.second); });
}

std::string AugVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < support.size(); ++i) os << (i ? "," : "") << grs::to_string(at(support[i]));
  os << ")";
  return os.str();
}

AugVector indicator(const std::vector<std::string>& support, const std::string& class_id) {
  AugVector a;
  a.support = support;
  for (const auto& id : support) a.values[id] = id == class_id ? 1 : 0;
  return a;
}

CharProfile synthesize_profile(const TableSlice& table, const AugVector& a) {
  CharProfile out;
  for (const auto& row : table.chars) {
    Cyclotomic v;
    for (const auto& id : a.support) v += Cyclotomic(a.at(id)) * row.at(id);
    out.values[row.name] = v;
  }
  return out;
}

CharProfile profile_of_class(const TableSlice& table, const std::string& class_id) {
  CharProfile out;
  for (const auto& row : table.chars) out.values[row.name] = row.at(class_id);
  return out;
}

AugVector invert_profile(const TableSlice& table, const CharProfile& profile,
                         const std::vector<std::string>& support) {
  if (support.empty()) throw PreconditionFailed("empty support");
  if (std::find(support.begin(), support.end(), table.identity_class()) != support.end())
    throw PreconditionFailed("support must exclude the identity class");
  const std::size_t n = support.size();

  // Augmented rows [coefficients | rhs]; the augmentation row comes first.
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<std::string> labels;
  rows.emplace_back(n + 1, Cyclotomic(1));
  labels.emplace_back("augmentation");
  for (const auto& ch : table.chars) {
    auto it = profile.values.find(ch.name);
    if (it == profile.values.end()) throw PreconditionFailed("profile has no value for " + ch.name);
    std::vector<Cyclotomic> r;
    r.reserve(n + 1);
    for (const auto& id : support) r.push_back(ch.at(id));
    r.push_back(it->second);
    rows.push_back(std::move(r));
    labels.push_back(ch.name);
  }

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::swap(labels[piv], labels[rank]);
    Cyclotomic inv = rows[rank][col].inverse();
    for (auto& e : rows[rank]) e *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Cyclotomic f = rows[r][col];
      for (std::size_t k = col; k <= n; ++k) rows[r][k] -= f * rows[rank][k];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (!rows[r][n].is_zero())
      throw Inconsistent("row " + labels[r] + " disagrees with the solution by " + rows[r][n].to_string());
  if (rank < n)
    throw Underdetermined("support of size " + std::to_string(n) + " but rank " + std::to_string(rank));

  AugVector out;
  out.support = support;
  for (std::size_t r = 0; r < rank; ++r) {
    const Cyclotomic& v = rows[r][n];
    if (!v.is_rational()) throw Inconsistent("non-rational partial augmentation " + v.to_string());
    out.values[support[pivot_col[r]]] = v.as_rational();
  }
  return out;
}

bool mrsw_conjugate_to_group_element(const AugVector& a) {
  return std::all_of(a.values.begin(), a.values.end(), [](const auto& kv) { return kv.second >= 0; });
}

bool admissible_subgroup(std::int64_t order, std::int64_t exponent, std::int64_t g_order,
                         std::int64_t g_exponent) {
  if (order <= 0 || exponent <= 0 || g_order <= 0 || g_exponent <= 0)
    throw PreconditionFailed("orders and exponents must be positive");
  return g_order % order == 0 && g_exponent % exponent == 0;
}

nlohmann::json to_json(const AugVector& a) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& id : a.support) out[id] = to_string(a.at(id));
  return out;
}

}  // namespace grs
