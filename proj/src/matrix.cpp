#include "grs/matrix.hpp"

#include "grs/error.hpp"

namespace grs {

QMatrix::QMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Rational(0)) {}

QMatrix::QMatrix(std::size_t dim, std::vector<Rational> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim * dim)
    throw PreconditionFailed("matrix entry count does not match dimension");
}

QMatrix QMatrix::identity(std::size_t dim) {
  QMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool QMatrix::is_identity() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (dim_ != o.dim_) throw SignatureMismatch("matrix dimensions differ");
  QMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t k = 0; k < dim_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * o(k, c);
    }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (dim_ != o.dim_) throw SignatureMismatch("matrix dimensions differ");
  QMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += o.entries_[i];
  return out;
}

QMatrix QMatrix::scaled(const Rational& s) const {
  QMatrix out = *this;
  for (auto& e : out.entries_) e *= s;
  return out;
}

QMatrix QMatrix::pow(unsigned long e) const {
  QMatrix result = identity(dim_);
  QMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

QMatrix companion_cyclotomic(int p) {
  if (p < 2) throw PreconditionFailed("companion matrix needs p >= 2");
  const std::size_t n = static_cast<std::size_t>(p - 1);
  QMatrix m(n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -1;
  return m;
}

unsigned long mat_order(const QMatrix& m, unsigned long bound) {
  QMatrix acc = m;
  for (unsigned long k = 1; k <= bound; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * m;
  }
  throw NoOrderWithinBound("no k <= " + std::to_string(bound) + " with m^k = 1");
}

BlockDiag BlockDiag::identity(const std::vector<std::size_t>& signature) {
  std::vector<QMatrix> blocks;
  blocks.reserve(signature.size());
  for (auto d : signature) blocks.push_back(QMatrix::identity(d));
  return BlockDiag(std::move(blocks));
}

std::vector<std::size_t> BlockDiag::signature() const {
  std::vector<std::size_t> s;
  s.reserve(blocks_.size());
  for (const auto& b : blocks_) s.push_back(b.dim());
  return s;
}

std::size_t BlockDiag::dim() const {
  std::size_t d = 0;
  for (const auto& b : blocks_) d += b.dim();
  return d;
}

Rational BlockDiag::trace() const {
  Rational t = 0;
  for (const auto& b : blocks_) t += b.trace();
  return t;
}

bool BlockDiag::is_identity() const {
  for (const auto& b : blocks_)
    if (!b.is_identity()) return false;
  return true;
}

BlockDiag BlockDiag::operator*(const BlockDiag& o) const {
  if (signature() != o.signature()) throw SignatureMismatch("block signatures differ");
  std::vector<QMatrix> out;
  out.reserve(blocks_.size());
  for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back(blocks_[i] * o.blocks_[i]);
  return BlockDiag(std::move(out));
}

BlockDiag BlockDiag::pow(unsigned long e) const {
  std::vector<QMatrix> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.pow(e));
  return BlockDiag(std::move(out));
}

BlockDiag block_mul(const BlockDiag& a, const BlockDiag& b) { return a * b; }
BlockDiag block_pow(const BlockDiag& a, unsigned long e) { return a.pow(e); }
Rational block_trace(const BlockDiag& a) { return a.trace(); }

nlohmann::json to_json(const QMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const BlockDiag& b) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : b.blocks()) out.push_back(to_json(m));
  return out;
}

}  // namespace grs
