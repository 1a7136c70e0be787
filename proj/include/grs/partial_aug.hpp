#pragma once

#include "grs/char_table.hpp"
#include "grs/cyclotomic.hpp"
#include "grs/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace grs {

/// Partial augmentations of a unit over a list of classes.
struct AugVector {
  std::vector<std::string> support;
  std::map<std::string, Rational> values;

  Rational at(const std::string& class_id) const;
  Rational sum() const;
  bool integral() const;
  /// "(e1,e2,...)" in support order.
  std::string to_string() const;

  friend bool operator==(const AugVector&, const AugVector&) = default;
};

/// Character values of one unit, keyed by CharSlice::name.
struct CharProfile {
  std::map<std::string, Cyclotomic> values;

  friend bool operator==(const CharProfile&, const CharProfile&) = default;
};

/// The indicator vector of one class.
AugVector indicator(const std::vector<std::string>& support, const std::string& class_id);

/// chi(u) = sum_x eps_x(u) chi(x) for every row of the table.
CharProfile synthesize_profile(const TableSlice& table, const AugVector& a);

/// Profile of a group element of the given class.
CharProfile profile_of_class(const TableSlice& table, const std::string& class_id);

/// Solves chi(u) = sum_{x in support} eps_x chi(x) together with sum eps = 1
/// exactly, then checks every remaining row. The identity class must not be
/// in the support. Throws Inconsistent or Underdetermined.
AugVector invert_profile(const TableSlice& table, const CharProfile& profile,
                         const std::vector<std::string>& support);

/// Rational conjugacy to a group element: every partial augmentation >= 0.
bool mrsw_conjugate_to_group_element(const AugVector& a);

/// order | g_order and exponent | g_exponent.
bool admissible_subgroup(std::int64_t order, std::int64_t exponent, std::int64_t g_order,
                         std::int64_t g_exponent);

/// {class-id: "a/b"}
nlohmann::json to_json(const AugVector& a);

}  // namespace grs
