#pragma once

#include "grs/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <vector>

namespace grs {

/// Dense square matrix of exact rationals, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t dim);  // zero matrix
  QMatrix(std::size_t dim, std::vector<Rational> entries);

  static QMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

  Rational trace() const;
  bool is_identity() const;

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix scaled(const Rational& s) const;
  /// Non-negative exponent only.
  QMatrix pow(unsigned long e) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

/// Companion matrix of 1 + x + ... + x^{p-1}: ones on the subdiagonal, last
/// column all -1. It has multiplicative order p.
QMatrix companion_cyclotomic(int p);

/// Least k <= bound with m^k = 1. Throws NoOrderWithinBound.
unsigned long mat_order(const QMatrix& m, unsigned long bound);

/// Block-diagonal matrix; products only between equal signatures.
class BlockDiag {
 public:
  BlockDiag() = default;
  explicit BlockDiag(std::vector<QMatrix> blocks) : blocks_(std::move(blocks)) {}

  static BlockDiag identity(const std::vector<std::size_t>& signature);

  const std::vector<QMatrix>& blocks() const { return blocks_; }
  std::vector<std::size_t> signature() const;
  std::size_t dim() const;

  Rational trace() const;
  bool is_identity() const;

  /// Throws SignatureMismatch.
  BlockDiag operator*(const BlockDiag& o) const;
  BlockDiag pow(unsigned long e) const;

  friend bool operator==(const BlockDiag&, const BlockDiag&) = default;

 private:
  std::vector<QMatrix> blocks_;
};

BlockDiag block_mul(const BlockDiag& a, const BlockDiag& b);
BlockDiag block_pow(const BlockDiag& a, unsigned long e);
Rational block_trace(const BlockDiag& a);

/// Row-major list of rows of "a/b" strings.
nlohmann::json to_json(const QMatrix& m);
/// List of blocks.
nlohmann::json to_json(const BlockDiag& b);

}  // namespace grs
