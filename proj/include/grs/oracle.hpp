#pragma once

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace grs {

enum class GroupKind { PSL2, PSL3 };

struct GroupSpec {
  GroupKind kind = GroupKind::PSL2;
  int q = 9;

  static GroupSpec psl2(int q) { return {GroupKind::PSL2, q}; }
  static GroupSpec psl3(int q) { return {GroupKind::PSL3, q}; }

  int dim() const { return kind == GroupKind::PSL2 ? 2 : 3; }
  std::string key() const;    // "psl2_q9"
  std::string label() const;  // "PSL(2,9)"
  std::int64_t formula_order() const;
};

/// Addition and multiplication tables of F_q for q = p or q = p^2 (p odd
/// for q = p^2). Elements are dense indices; for q = p^2 index a + b*p
/// stands for a + b*w as in Fp2.
class FieldTables {
 public:
  explicit FieldTables(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int add(int x, int y) const { return add_[x * q_ + y]; }
  int mul(int x, int y) const { return mul_[x * q_ + y]; }
  int neg(int x) const { return neg_[x]; }
  int inv(int x) const { return inv_[x]; }
  bool is_square(int x) const { return square_[x]; }
  /// Index of the generator w of F_{p^2} over F_p (1 when q is prime).
  int w() const { return q_ == p_ ? 1 : p_; }

 private:
  int q_;
  int p_;
  std::vector<int> add_, mul_, neg_, inv_;
  std::vector<bool> square_;
};

/// Matrix over F_q as field indices, row-major, dim <= 3.
struct FqMatrix {
  int dim = 2;
  std::array<std::uint8_t, 9> e{};

  int at(int r, int c) const { return e[r * dim + c]; }
  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
};

struct ConjugacyClass {
  std::size_t representative = 0;  // element index
  std::size_t size = 0;
  int element_order = 1;
  std::int64_t centralizer_order = 0;
};

/// PSL(n, q) as an explicit list of canonical projective representatives
/// (the least scalar multiple in base-q key order), closed under products.
class MatrixGroup {
 public:
  /// Closure from transvection generators. Throws TooLarge above 10^5 elements.
  static MatrixGroup enumerate(const GroupSpec& spec);
  /// Reads a cache written by save() and checks closure. Throws ParseError.
  static MatrixGroup load(const GroupSpec& spec, const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  const GroupSpec& spec() const { return spec_; }
  const FieldTables& field() const { return field_; }
  std::size_t order() const { return elements_.size(); }
  const FqMatrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<FqMatrix>& generators() const { return generators_; }

  /// Canonical representative's index; throws PreconditionFailed if absent.
  std::size_t index_of(const FqMatrix& m) const;
  std::size_t multiply(std::size_t i, std::size_t j) const;
  int element_order(std::size_t i) const;
  std::int64_t exponent() const;

  /// Full class partition by conjugation orbits, sorted by (order, size, rep).
  std::vector<ConjugacyClass> classes() const;
  /// Class index for every element, consistent with classes().
  std::vector<int> class_ids() const;
  std::vector<ConjugacyClass> order_p_classes(int p) const;

  /// Fixed points on the projective space of F_q^dim.
  int fixed_points(std::size_t i) const;

  /// [[1, lambda], [0, 1]] for PSL(2, q).
  FqMatrix unipotent(int lambda) const;
  FqMatrix identity_matrix() const;

 private:
  MatrixGroup(GroupSpec spec);
  FqMatrix mul(const FqMatrix& a, const FqMatrix& b) const;
  FqMatrix canonical(const FqMatrix& m) const;
  std::uint64_t key(const FqMatrix& m) const;
  FqMatrix inverse_matrix(const FqMatrix& m) const;
  void build_index();
  void check_closure() const;

  GroupSpec spec_;
  FieldTables field_;
  std::vector<int> scalars_;  // s with s^dim = 1
  std::vector<FqMatrix> generators_;
  std::vector<FqMatrix> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Cached enumeration in `cache_dir` (created if missing); `refresh` forces
/// a new enumeration. An unreadable cache is replaced.
MatrixGroup load_or_enumerate(const GroupSpec& spec, const std::filesystem::path& cache_dir, bool refresh,
                              bool* from_cache = nullptr);

struct SquareCriterionReport {
  int p = 0;
  int pairs_checked = 0;
  int mismatches = 0;
  bool holds() const { return pairs_checked > 0 && mismatches == 0; }
};

/// [[1,l],[0,1]] ~ [[1,m],[0,1]] in PSL(2,p^2) exactly when m/l is a square.
/// Only p in {3, 5} (sizes 360 and 7800).
SquareCriterionReport check_square_criterion(int p);
SquareCriterionReport check_square_criterion(const MatrixGroup& g);

nlohmann::json to_json(const MatrixGroup& g, const std::vector<ConjugacyClass>& classes);

}  // namespace grs
