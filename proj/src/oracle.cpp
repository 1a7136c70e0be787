#include "grs/oracle.hpp"

#include "grs/error.hpp"
#include "grs/finite_field.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

namespace grs {

namespace {

constexpr std::int64_t kMaxOrder = 100000;

}  // namespace

std::string GroupSpec::key() const {
  return std::string(kind == GroupKind::PSL2 ? "psl2" : "psl3") + "_q" + std::to_string(q);
}

std::string GroupSpec::label() const {
  return "PSL(" + std::to_string(dim()) + "," + std::to_string(q) + ")";
}

std::int64_t GroupSpec::formula_order() const {
  const std::int64_t Q = q;
  if (kind == GroupKind::PSL2) return Q * (Q * Q - 1) / std::gcd<std::int64_t>(2, Q - 1);
  return Q * Q * Q * (Q * Q - 1) * (Q * Q * Q - 1) / std::gcd<std::int64_t>(3, Q - 1);
}

FieldTables::FieldTables(int q) : q_(q), p_(q) {
  if (is_prime(q)) {
    p_ = q;
  } else {
    int r = 2;
    while (r * r < q) ++r;
    if (r * r != q || !is_prime(r) || r == 2) throw NotPrime("F_" + std::to_string(q) + " is not supported");
    p_ = r;
  }
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  square_.assign(q, false);
  if (q == p_) {
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) {
        add_[x * q + y] = (x + y) % q;
        mul_[x * q + y] = (x * y) % q;
      }
  } else {
    Fp2 f(p_);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) {
        add_[x * q + y] = f.index(f.add(f.from_index(x), f.from_index(y)));
        mul_[x * q + y] = f.index(f.mul(f.from_index(x), f.from_index(y)));
      }
  }
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      if (add(x, y) == 0) neg_[x] = y;
      if (mul(x, y) == 1) inv_[x] = y;
    }
    if (x != 0) square_[mul(x, x)] = true;
  }
}

MatrixGroup::MatrixGroup(GroupSpec spec) : spec_(spec), field_(spec.q) {
  const int n = spec.dim();
  for (int s = 1; s < field_.q(); ++s) {
    int acc = 1;
    for (int k = 0; k < n; ++k) acc = field_.mul(acc, s);
    if (acc == 1) scalars_.push_back(s);
  }
  // Elementary transvections with entries 1 and w generate SL(n, q).
  std::vector<int> params{1};
  if (field_.q() != field_.p()) params.push_back(field_.w());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r == c) continue;
      for (int t : params) {
        FqMatrix m = identity_matrix();
        m.e[r * n + c] = static_cast<std::uint8_t>(t);
        generators_.push_back(canonical(m));
      }
    }
}

FqMatrix MatrixGroup::identity_matrix() const {
  FqMatrix m;
  m.dim = spec_.dim();
  for (int i = 0; i < m.dim; ++i) m.e[i * m.dim + i] = 1;
  return m;
}

FqMatrix MatrixGroup::unipotent(int lambda) const {
  if (spec_.kind != GroupKind::PSL2) throw PreconditionFailed("unipotent(lambda) is defined for PSL(2,q)");
  FqMatrix m = identity_matrix();
  m.e[1] = static_cast<std::uint8_t>(lambda);
  return m;
}

FqMatrix MatrixGroup::mul(const FqMatrix& a, const FqMatrix& b) const {
  FqMatrix out;
  out.dim = a.dim;
  const int n = a.dim;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int acc = 0;
      for (int k = 0; k < n; ++k) acc = field_.add(acc, field_.mul(a.at(r, k), b.at(k, c)));
      out.e[r * n + c] = static_cast<std::uint8_t>(acc);
    }
  return out;
}

std::uint64_t MatrixGroup::key(const FqMatrix& m) const {
  std::uint64_t k = 0;
  for (int i = 0; i < m.dim * m.dim; ++i) k = k * static_cast<std::uint64_t>(field_.q()) + m.e[i];
  return k;
}

FqMatrix MatrixGroup::canonical(const FqMatrix& m) const {
  FqMatrix best = m;
  std::uint64_t best_key = key(m);
  for (int s : scalars_) {
    FqMatrix t = m;
    for (int i = 0; i < m.dim * m.dim; ++i) t.e[i] = static_cast<std::uint8_t>(field_.mul(s, m.e[i]));
    if (auto k = key(t); k < best_key) {
      best = t;
      best_key = k;
    }
  }
  return best;
}

void MatrixGroup::build_index() {
  index_.clear();
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(key(elements_[i]), i);
}

MatrixGroup MatrixGroup::enumerate(const GroupSpec& spec) {
  if (spec.kind == GroupKind::PSL3 && spec.q != 3) throw PreconditionFailed("only PSL(3,3) is supported");
  if (spec.formula_order() > kMaxOrder) throw TooLarge(spec.label() + " has more than 10^5 elements");
  MatrixGroup g(spec);
  std::deque<std::size_t> queue;
  g.elements_.push_back(g.canonical(g.identity_matrix()));
  g.index_.emplace(g.key(g.elements_[0]), 0);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& gen : g.generators_) {
      FqMatrix m = g.canonical(g.mul(g.elements_[i], gen));
      auto [it, inserted] = g.index_.emplace(g.key(m), g.elements_.size());
      if (!inserted) continue;
      g.elements_.push_back(m);
      queue.push_back(it->second);
      if (static_cast<std::int64_t>(g.elements_.size()) > kMaxOrder) throw TooLarge("closure exceeded 10^5 elements");
    }
  }
  return g;
}

std::size_t MatrixGroup::index_of(const FqMatrix& m) const {
  auto it = index_.find(key(canonical(m)));
  if (it == index_.end()) throw PreconditionFailed("matrix is not in " + spec_.label());
  return it->second;
}

std::size_t MatrixGroup::multiply(std::size_t i, std::size_t j) const {
  return index_of(mul(elements_[i], elements_[j]));
}

int MatrixGroup::element_order(std::size_t i) const {
  const std::size_t id = index_of(identity_matrix());
  int k = 1;
  for (std::size_t acc = i; acc != id; acc = multiply(acc, i)) ++k;
  return k;
}

std::int64_t MatrixGroup::exponent() const {
  std::int64_t e = 1;
  for (std::size_t i = 0; i < order(); ++i) e = std::lcm<std::int64_t>(e, element_order(i));
  return e;
}

std::vector<int> MatrixGroup::class_ids() const {
  std::vector<std::size_t> gens, gen_invs;
  for (const auto& gm : generators_) {
    std::size_t gi = index_of(gm);
    gens.push_back(gi);
    std::size_t inv = gi;
    for (int k = 1; k < element_order(gi) - 1; ++k) inv = multiply(inv, gi);
    gen_invs.push_back(element_order(gi) == 1 ? gi : inv);
  }
  std::vector<int> ids(order(), -1);
  int next = 0;
  for (std::size_t start = 0; start < order(); ++start) {
    if (ids[start] >= 0) continue;
    std::deque<std::size_t> queue{start};
    ids[start] = next;
    while (!queue.empty()) {
      std::size_t y = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::size_t z = multiply(multiply(gens[k], y), gen_invs[k]);
        if (ids[z] >= 0) continue;
        ids[z] = next;
        queue.push_back(z);
      }
    }
    ++next;
  }
  // Renumber by (element order, size, representative); the representative
  // is the least index, which is also the discovery order above.
  std::vector<std::size_t> size(next, 0), rep(next, 0);
  std::vector<int> ord(next, 0);
  for (std::size_t i = order(); i-- > 0;) {
    ++size[ids[i]];
    rep[ids[i]] = i;
  }
  for (int c = 0; c < next; ++c) ord[c] = element_order(rep[c]);
  std::vector<int> perm(next);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return std::tie(ord[a], size[a], rep[a]) < std::tie(ord[b], size[b], rep[b]);
  });
  std::vector<int> renumber(next);
  for (int k = 0; k < next; ++k) renumber[perm[k]] = k;
  for (auto& id : ids) id = renumber[id];
  return ids;
}

std::vector<ConjugacyClass> MatrixGroup::classes() const {
  auto ids = class_ids();
  const int count = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  std::vector<ConjugacyClass> out(count);
  std::vector<bool> seen(count, false);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto& c = out[ids[i]];
    if (!seen[ids[i]]) {
      seen[ids[i]] = true;
      c.representative = i;
      c.element_order = element_order(i);
    }
    ++c.size;
  }
  for (auto& c : out) c.centralizer_order = static_cast<std::int64_t>(order() / c.size);
  return out;
}

std::vector<ConjugacyClass> MatrixGroup::order_p_classes(int p) const {
  std::vector<ConjugacyClass> out;
  for (const auto& c : classes())
    if (c.element_order == p) out.push_back(c);
  return out;
}

int MatrixGroup::fixed_points(std::size_t i) const {
  const int n = spec_.dim();
  const int q = field_.q();
  const FqMatrix& m = elements_[i];
  int total = 1;
  for (int k = 0; k < n; ++k) total *= q;
  int fixed = 0;
  for (int code = 1; code < total; ++code) {
    std::array<int, 3> v{};
    for (int k = n - 1, rest = code; k >= 0; --k, rest /= q) v[k] = rest % q;
    int lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;  // one normalized vector per point
    std::array<int, 3> w{};
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) w[r] = field_.add(w[r], field_.mul(m.at(r, k), v[k]));
    // w must be a scalar multiple of v; the scalar is w[lead].
    bool prop = w[lead] != 0;
    for (int r = 0; r < n && prop; ++r) prop = w[r] == field_.mul(w[lead], v[r]);
    if (prop) ++fixed;
  }
  return fixed;
}

void MatrixGroup::check_closure() const {
  if (static_cast<std::int64_t>(order()) != spec_.formula_order())
    throw ParseError("cached " + spec_.label() + " has " + std::to_string(order()) + " elements");
  if (index_.size() != elements_.size()) throw ParseError("cache has repeated elements");
  for (const auto& m : elements_)
    if (!(canonical(m) == m)) throw ParseError("cache holds a non-canonical representative");
  for (std::size_t i = 0; i < order(); ++i)
    for (const auto& gen : generators_)
      if (!index_.count(key(canonical(mul(elements_[i], gen))))) throw ParseError("cached element set is not closed");
}

void MatrixGroup::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << "# grs oracle cache v1: one canonical matrix per line, row-major field indices\n";
  out << "group " << spec_.key() << " order " << order() << "\n";
  for (const auto& m : elements_) {
    for (int i = 0; i < m.dim * m.dim; ++i) out << (i ? " " : "") << static_cast<int>(m.e[i]);
    out << "\n";
  }
}

MatrixGroup MatrixGroup::load(const GroupSpec& spec, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  MatrixGroup g(spec);
  bool header = false;
  const int n = spec.dim();
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    if (!header) {
      std::string word, key, order_word;
      std::size_t count = 0;
      if (!(is >> word >> key >> order_word >> count) || word != "group" || key != spec.key() || order_word != "order")
        throw ParseError("cache header does not match " + spec.key());
      g.elements_.reserve(count);
      header = true;
      continue;
    }
    FqMatrix m;
    m.dim = n;
    for (int i = 0; i < n * n; ++i) {
      int v = -1;
      if (!(is >> v) || v < 0 || v >= spec.q) throw ParseError("bad matrix line in cache: '" + line + "'");
      m.e[i] = static_cast<std::uint8_t>(v);
    }
    g.elements_.push_back(m);
  }
  if (!header) throw ParseError("empty cache " + path.string());
  g.build_index();
  g.check_closure();
  return g;
}

MatrixGroup load_or_enumerate(const GroupSpec& spec, const std::filesystem::path& cache_dir, bool refresh,
                              bool* from_cache) {
  const auto path = cache_dir / (spec.key() + ".txt");
  if (from_cache) *from_cache = false;
  if (!refresh && std::filesystem::exists(path)) {
    try {
      auto g = MatrixGroup::load(spec, path);
      if (from_cache) *from_cache = true;
      return g;
    } catch (const ParseError&) {
      // fall through and rebuild
    }
  }
  auto g = MatrixGroup::enumerate(spec);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (ec) return g;
  try {
    g.save(path);
  } catch (const ParseError&) {
    // read-only cache directory: keep the in-memory enumeration
  }
  return g;
}

SquareCriterionReport check_square_criterion(int p) {
  if (p != 3 && p != 5) throw PreconditionFailed("square criterion is checked for p in {3, 5}");
  return check_square_criterion(MatrixGroup::enumerate(GroupSpec::psl2(p * p)));
}

SquareCriterionReport check_square_criterion(const MatrixGroup& g) {
  if (g.spec().kind != GroupKind::PSL2) throw PreconditionFailed("square criterion needs PSL(2,q)");
  SquareCriterionReport r;
  r.p = g.field().p();
  const auto ids = g.class_ids();
  const auto& f = g.field();
  for (int l = 1; l < f.q(); ++l)
    for (int m = 1; m < f.q(); ++m) {
      bool conj = ids[g.index_of(g.unipotent(l))] == ids[g.index_of(g.unipotent(m))];
      bool square = f.is_square(f.mul(m, f.inv(l)));
      ++r.pairs_checked;
      if (conj != square) ++r.mismatches;
    }
  return r;
}

nlohmann::json to_json(const MatrixGroup& g, const std::vector<ConjugacyClass>& classes) {
  nlohmann::json cls = nlohmann::json::array();
  for (const auto& c : classes) {
    nlohmann::json rep = nlohmann::json::array();
    const auto& m = g.element(c.representative);
    for (int i = 0; i < m.dim * m.dim; ++i) rep.push_back(static_cast<int>(m.e[i]));
    cls.push_back({{"representative", rep},
                   {"size", c.size},
                   {"element_order", c.element_order},
                   {"centralizer_order", c.centralizer_order}});
  }
  return {{"group", g.spec().label()}, {"order", g.order()}, {"classes", cls}};
}

}  // namespace grs
