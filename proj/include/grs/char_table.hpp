#pragma once

#include "grs/cyclotomic.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grs {

struct ClassInfo {
  std::string id;
  int element_order = 1;
  std::int64_t class_size = 1;
  std::int64_t centralizer_order = 1;
};

/// A character restricted to the modelled columns.
struct CharSlice {
  std::string name;
  std::int64_t degree = 1;
  std::map<std::string, Cyclotomic> values;  // keyed by ClassInfo::id

  const Cyclotomic& at(const std::string& class_id) const;
};

/// A few columns of a character table together with every irreducible row.
struct TableSlice {
  std::string group;
  std::int64_t group_order = 1;
  std::vector<ClassInfo> classes;  // classes[0] is the identity
  std::vector<CharSlice> chars;
  std::vector<std::string> notes;

  const ClassInfo& find_class(const std::string& id) const;
  const CharSlice& find_char(const std::string& name) const;
  bool has_char(const std::string& name) const;
  /// Row of degree one with value one everywhere; throws ValidationError.
  const CharSlice& trivial() const;
  const std::string& identity_class() const { return classes.front().id; }
};

/// Columns {1, c, d} of PSL(2, p^2): identity and the two unipotent classes.
/// Rows are named "1", "St", "ps<k>", "ds<k>", "eta", "eta~".
TableSlice psl2_slice(int p);

/// Parses the line format documented in data/psl33.tbl and validates it by
/// column orthogonality. Throws ParseError or ValidationError.
TableSlice parse_table(const std::string& text);
TableSlice load_table(const std::filesystem::path& path);

struct OrthogonalityEntry {
  std::string x;
  std::string y;
  Cyclotomic computed;
  Cyclotomic expected;
  bool ok = false;
};

struct OrthogonalityReport {
  std::vector<OrthogonalityEntry> entries;
  bool ok() const;
};

/// Sum over rows of chi(x) * conj(chi(y)) against |C_G(x)| or 0.
OrthogonalityReport validate_orthogonality(const TableSlice& t);

/// psi restricted to `support` written as sum_i coeffs[i]*basis_i + residual.
struct RowDecomposition {
  std::string row;
  std::vector<std::int64_t> coeffs;  // one per basis row
  Cyclotomic residual_value;         // common value on the support classes
  Cyclotomic residual_degree;
  bool nonnegative = false;          // all coeffs >= 0
};

/// For every row, integer coefficients over the basis rows such that the
/// residual is constant on the support classes. Non-negative solutions with
/// the least total weight are preferred. Rows with no solution in the search
/// box are omitted from the result.
std::vector<RowDecomposition> decompose_on_support(const TableSlice& t,
                                                   const std::vector<std::string>& basis,
                                                   const std::vector<std::string>& support);

nlohmann::json to_json(const TableSlice& t);
nlohmann::json to_json(const OrthogonalityReport& r);

/// Plain-text rendering used by the CLI.
std::string format_table(const TableSlice& t);

}  // namespace grs
