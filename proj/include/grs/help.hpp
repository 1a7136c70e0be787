#pragma once

#include "grs/char_table.hpp"
#include "grs/cyclotomic.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace grs {

/// U = C_p^rank as exponent vectors; element i has base-p digits of i,
/// most significant first, so index order is lexicographic.
class ElementaryAbelian {
 public:
  ElementaryAbelian(int p, int rank);

  int p() const { return p_; }
  int rank() const { return rank_; }
  int order() const { return order_; }
  std::vector<int> exponents(int index) const;
  int index_of(const std::vector<int>& exponents) const;

  /// Cyclic subgroups by normalized generator (first nonzero coordinate 1),
  /// in lexicographic order; there are (p^rank - 1)/(p - 1) of them.
  const std::vector<std::vector<int>>& subgroups() const { return subgroups_; }
  int num_subgroups() const { return static_cast<int>(subgroups_.size()); }
  /// Subgroup containing a nontrivial element; -1 for the identity.
  int subgroup_of(int index) const { return subgroup_of_[index]; }

  /// Exponent of zeta_p in chi(w) for the linear character chi.
  int pairing(const std::vector<int>& chi, int index) const;

 private:
  int p_;
  int rank_;
  int order_;
  std::vector<std::vector<int>> subgroups_;
  std::vector<int> subgroup_of_;
};

/// Which order-p class each cyclic subgroup of U is sent to.
struct Assignment {
  int p = 0;
  int rank = 0;
  std::vector<std::string> subgroup_classes;  // indexed like ElementaryAbelian::subgroups()

  int count(const std::string& class_id) const;
};

/// The assignment putting the first x subgroups on `first` and the rest on `second`.
Assignment prefix_assignment(int p, int rank, int x, const std::string& first, const std::string& second);

/// <theta, chi>_U = p^{-rank} sum_{w in U} theta(w) conj(chi(w)), with
/// theta(identity) = degree. chi is the exponent vector of a linear
/// character. Throws UnassignedClass.
Cyclotomic multiplicity(const CharSlice& theta, const Assignment& a, const std::vector<int>& chi);

struct HelpWitness {
  int x = 0;
  std::string theta;         // first row with these values on the scanned classes
  int rows_sharing = 1;      // rows of the table with identical values there
  std::vector<int> chi;
  Cyclotomic multiplicity;
  std::string reason;        // "non-integral", "negative", "non-rational"
};

struct CountResult {
  int x = 0;
  bool feasible = false;                // all linear characters
  bool feasible_nontrivial_only = false;
  bool symmetric = true;                // sampled assignments with this count agree
  std::string mode;                     // "representative" or "exhaustive"
  long assignments_checked = 0;
  long feasible_assignments = 0;
  std::vector<HelpWitness> witnesses;   // for the prefix assignment
};

struct HelpScan {
  std::string group;
  int p = 0;
  int rank = 0;
  std::vector<std::string> classes;  // classes[0] is the one counted by x
  int num_subgroups = 0;
  bool p2_early_exit = false;
  std::vector<int> feasible;
  std::vector<int> feasible_nontrivial_only;
  std::vector<CountResult> counts;

  bool filters_agree() const { return feasible == feasible_nontrivial_only; }
  /// First witness for count x, preferring a non-integral one.
  const HelpWitness* headline_witness(int x) const;
};

struct ScanOptions {
  std::vector<std::string> thetas;  // empty: every row of the table
  unsigned jobs = 1;
  int max_exhaustive_subgroups = 20;
};

/// HeLP scan over x = number of cyclic subgroups of U = C_p^rank sent to the
/// first order-p class. x is feasible when every multiplicity is a
/// non-negative integer.
HelpScan feasible_distributions(const TableSlice& table, int p, int rank, const ScanOptions& options = {});

nlohmann::json to_json(const HelpScan& scan);

}  // namespace grs
