#pragma once

#include "grs/finite_field.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace grs {

/// A subset of {1, ..., p-1}: the exponents i for which u*v^i carries the
/// character values of class c.
struct Pattern {
  int p = 0;
  std::vector<int> members;  // sorted, distinct

  bool balanced() const { return static_cast<int>(members.size()) == (p - 1) / 2; }
  bool contains(int i) const;
  /// "1,2,4"
  std::string to_string() const;

  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

/// Parses "1,2,4". Throws BadPattern on malformed input or members outside
/// {1, ..., p-1}.
Pattern parse_pattern(int p, const std::string& text);

/// Every (p-1)/2-subset of {1, ..., p-1}, lexicographic.
std::vector<Pattern> balanced_patterns(int p);

/// {i : lambda + i*mu is a square}, for lambda a square and mu a non-square.
Pattern pattern_of(const Fp2& field, FqElement lambda, FqElement mu);

/// Patterns realized by pairs (g, h) of the Sylow p-subgroup (F_{p^2}, +) of
/// PSL(2, p^2) with g in the square class and h in the non-square class;
/// g is normalized to 1. Sorted, deduplicated.
std::vector<Pattern> group_patterns(int p);

/// The same set from every square lambda and non-square mu.
std::vector<Pattern> group_patterns_full(int p);

struct GapReport {
  int p = 0;
  std::int64_t balanced = 0;    // binomial(p-1, (p-1)/2)
  std::int64_t realizable = 0;  // |group_patterns(p)|
  std::int64_t bound = 0;       // (p^2-1)/2 choices for h
  bool counting_certifies = false;
  bool normalized_matches_full = false;
  std::vector<Pattern> missing;
};

GapReport gap_report(int p);

nlohmann::json to_json(const GapReport& r, bool list_missing);

}  // namespace grs
