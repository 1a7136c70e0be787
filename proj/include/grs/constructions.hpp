#pragma once

#include "grs/char_table.hpp"
#include "grs/finite_field.hpp"
#include "grs/matrix.hpp"
#include "grs/partial_aug.hpp"
#include "grs/patterns.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grs {

/// A unit of QG given by explicit blocks in the distinguished Wedderburn
/// components and by its character values in every other component.
struct BlockUnit {
  std::map<std::string, BlockDiag> components;      // keyed by character name
  std::map<std::string, Cyclotomic> forced_values;  // remaining rows

  friend bool operator==(const BlockUnit& a, const BlockUnit& b) { return a.components == b.components; }
};

struct UnitElement {
  std::vector<int> exponents;  // w.r.t. the generators
  BlockUnit unit;
};

/// An elementary abelian group of units with all elements materialized,
/// ordered lexicographically by exponent vector.
struct UnitGroup {
  std::string label;
  int p = 0;
  int rank = 0;
  std::vector<std::string> support;        // the order-p classes
  std::vector<std::string> distinguished;  // rows realized by explicit blocks
  std::vector<BlockUnit> generators;
  std::vector<UnitElement> elements;
  std::vector<RowDecomposition> forced_rules;
  std::optional<Pattern> pattern;

  const UnitElement& element(const std::vector<int>& exponents) const;
};

/// u = (1, E, A^{-i_1}, ..., A^{-i_k}), v = (1, A, ..., A) in the eta
/// component of PSL(2, p^2). Throws BadPattern unless the pattern is balanced.
UnitGroup build_psl2_units(int p, const Pattern& pattern);

/// alpha, beta, gamma of order 3 in the chi and phi components of PSL(3,3).
/// `table` must contain rows "chi" and "phi" and classes "a", "b".
UnitGroup build_psl33_units(const TableSlice& table);

/// Character values of one element: block traces plus forced values.
CharProfile profile_of(const UnitGroup& ug, const UnitElement& e);

struct ElementReport {
  std::vector<int> exponents;
  std::map<std::string, Rational> traces;  // per distinguished component
  std::optional<AugVector> eps;
  std::string error;                       // set when inversion fails
  bool integral = false;
  bool conjugate_to_group_element = false;
};

struct UnitGroupReport {
  bool generators_commute = false;
  std::vector<unsigned long> generator_orders;
  std::size_t group_order = 0;
  bool faithful = false;
  bool all_integral = false;
  std::vector<ElementReport> elements;           // nontrivial elements
  std::map<std::string, int> eps_counts;         // AugVector::to_string() -> count
  std::optional<Pattern> recovered_pattern;

  bool ok() const;
};

UnitGroupReport verify_unit_group(const UnitGroup& ug, const TableSlice& table);

/// {i : trace of u*v^i in the eta component equals eta(c)}.
Pattern recover_pattern(const UnitGroup& ug, const TableSlice& table);

struct ValentiWitness {
  FqElement image_u;  // lambda
  FqElement image_v;  // mu
  Pattern pattern;    // {i : lambda + i*mu lies in the class of lambda}
};

/// Searches every isomorphism U -> P = (F_{p^2}, +), given by generator
/// images (lambda, mu), for one that preserves every irreducible character
/// value. Group elements are classed "c" (square), "d" (non-square).
/// Profiles are keyed by exponent vectors of length 2.
std::optional<ValentiWitness> valenti_search(const std::map<std::vector<int>, CharProfile>& unit_profiles,
                                             const TableSlice& table, int p);

std::map<std::vector<int>, CharProfile> unit_profiles(const UnitGroup& ug);

nlohmann::json to_json(const UnitGroupReport& r);

}  // namespace grs
