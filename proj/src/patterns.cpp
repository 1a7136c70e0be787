#include "grs/patterns.hpp"

#include "grs/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace grs {

bool Pattern::contains(int i) const { return std::binary_search(members.begin(), members.end(), i); }

std::string Pattern::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < members.size(); ++k) os << (k ? "," : "") << members[k];
  return os.str();
}

Pattern parse_pattern(int p, const std::string& text) {
  Pattern out;
  out.p = p;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) throw BadPattern("empty entry in '" + text + "'");
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw BadPattern("not an integer: '" + tok + "'");
    }
    if (v < 1 || v > p - 1) throw BadPattern(tok + " is outside 1.." + std::to_string(p - 1));
    out.members.push_back(v);
  }
  std::sort(out.members.begin(), out.members.end());
  if (std::adjacent_find(out.members.begin(), out.members.end()) != out.members.end())
    throw BadPattern("repeated entry in '" + text + "'");
  return out;
}

std::vector<Pattern> balanced_patterns(int p) {
  if (!is_prime(p) || p == 2) throw NotPrime(std::to_string(p) + " is not an odd prime");
  const int k = (p - 1) / 2;
  std::vector<Pattern> out;
  std::vector<bool> pick(p - 1, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Pattern pat{p, {}};
    for (int i = 0; i < p - 1; ++i)
      if (pick[i]) pat.members.push_back(i + 1);
    out.push_back(std::move(pat));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

Pattern pattern_of(const Fp2& field, FqElement lambda, FqElement mu) {
  Pattern pat{field.p(), {}};
  for (int i = 1; i < field.p(); ++i) {
    FqElement e = field.add(lambda, field.scale(i, mu));
    if (field.is_square(e)) pat.members.push_back(i);
  }
  return pat;
}

std::vector<Pattern> group_patterns(int p) {
  Fp2 field(p);
  std::set<Pattern> out;
  for (const auto& mu : field.nonzero_elements())
    if (!field.is_square(mu)) out.insert(pattern_of(field, field.one(), mu));
  return {out.begin(), out.end()};
}

std::vector<Pattern> group_patterns_full(int p) {
  Fp2 field(p);
  std::set<Pattern> out;
  auto nonzero = field.nonzero_elements();
  for (const auto& lambda : nonzero) {
    if (!field.is_square(lambda)) continue;
    for (const auto& mu : nonzero)
      if (!field.is_square(mu)) out.insert(pattern_of(field, lambda, mu));
  }
  return {out.begin(), out.end()};
}

GapReport gap_report(int p) {
  GapReport r;
  r.p = p;
  auto all = balanced_patterns(p);
  auto realizable = group_patterns(p);
  r.balanced = static_cast<std::int64_t>(all.size());
  r.realizable = static_cast<std::int64_t>(realizable.size());
  r.bound = (static_cast<std::int64_t>(p) * p - 1) / 2;
  r.counting_certifies = r.balanced > r.bound;
  r.normalized_matches_full = realizable == group_patterns_full(p);
  std::set_difference(all.begin(), all.end(), realizable.begin(), realizable.end(),
                      std::back_inserter(r.missing));
  return r;
}

nlohmann::json to_json(const GapReport& r, bool list_missing) {
  nlohmann::json out = {{"p", r.p},
                        {"balanced", r.balanced},
                        {"realizable", r.realizable},
                        {"bound", r.bound},
                        {"counting_certifies", r.counting_certifies},
                        {"normalized_matches_full", r.normalized_matches_full},
                        {"missing_count", r.missing.size()}};
  if (list_missing) {
    nlohmann::json missing = nlohmann::json::array();
    for (const auto& m : r.missing) missing.push_back(m.to_string());
    out["missing"] = missing;
  }
  return out;
}

}  // namespace grs
