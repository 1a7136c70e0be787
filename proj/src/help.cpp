#include "grs/help.hpp"

#include "grs/error.hpp"
#include "grs/finite_field.hpp"
#include "grs/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace grs {

ElementaryAbelian::ElementaryAbelian(int p, int rank) : p_(p), rank_(rank), order_(1) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (rank < 1) throw PreconditionFailed("rank must be positive");
  for (int i = 0; i < rank; ++i) order_ *= p;
  if (order_ > 100000) throw TooLarge("C_p^rank with more than 10^5 elements");
  subgroup_of_.assign(order_, -1);
  std::map<std::vector<int>, int> by_generator;
  for (int i = 1; i < order_; ++i) {
    auto e = exponents(i);
    auto lead = std::find_if(e.begin(), e.end(), [](int v) { return v != 0; });
    int inv = 1;
    while ((inv * *lead) % p != 1) ++inv;
    for (auto& v : e) v = (v * inv) % p;
    auto [it, inserted] = by_generator.emplace(e, 0);
    if (inserted) subgroups_.push_back(e);
  }
  std::sort(subgroups_.begin(), subgroups_.end());
  for (int s = 0; s < static_cast<int>(subgroups_.size()); ++s) by_generator[subgroups_[s]] = s;
  for (int i = 1; i < order_; ++i) {
    auto e = exponents(i);
    auto lead = std::find_if(e.begin(), e.end(), [](int v) { return v != 0; });
    int inv = 1;
    while ((inv * *lead) % p != 1) ++inv;
    for (auto& v : e) v = (v * inv) % p;
    subgroup_of_[i] = by_generator.at(e);
  }
}

std::vector<int> ElementaryAbelian::exponents(int index) const {
  std::vector<int> e(rank_);
  for (int k = rank_ - 1; k >= 0; --k) {
    e[k] = index % p_;
    index /= p_;
  }
  return e;
}

int ElementaryAbelian::index_of(const std::vector<int>& exponents) const {
  int idx = 0;
  for (int v : exponents) idx = idx * p_ + ((v % p_) + p_) % p_;
  return idx;
}

int ElementaryAbelian::pairing(const std::vector<int>& chi, int index) const {
  auto e = exponents(index);
  long s = 0;
  for (int k = 0; k < rank_; ++k) s += static_cast<long>(chi[k]) * e[k];
  return static_cast<int>(((s % p_) + p_) % p_);
}

int Assignment::count(const std::string& class_id) const {
  return static_cast<int>(std::count(subgroup_classes.begin(), subgroup_classes.end(), class_id));
}

Assignment prefix_assignment(int p, int rank, int x, const std::string& first, const std::string& second) {
  ElementaryAbelian u(p, rank);
  if (x < 0 || x > u.num_subgroups()) throw PreconditionFailed("count out of range");
  Assignment a;
  a.p = p;
  a.rank = rank;
  for (int s = 0; s < u.num_subgroups(); ++s) a.subgroup_classes.push_back(s < x ? first : second);
  return a;
}

Cyclotomic multiplicity(const CharSlice& theta, const Assignment& a, const std::vector<int>& chi) {
  ElementaryAbelian u(a.p, a.rank);
  if (static_cast<int>(a.subgroup_classes.size()) != u.num_subgroups())
    throw PreconditionFailed("assignment does not cover every cyclic subgroup");
  if (static_cast<int>(chi.size()) != a.rank) throw PreconditionFailed("character exponent vector has wrong length");
  Cyclotomic sum(Rational(theta.degree));
  for (int w = 1; w < u.order(); ++w) {
    const std::string& cls = a.subgroup_classes[u.subgroup_of(w)];
    sum += theta.at(cls) * Cyclotomic::root(a.p, -u.pairing(chi, w));
  }
  return sum / Cyclotomic(Rational(u.order()));
}

namespace {

struct ThetaSignature {
  std::string name;
  int shared = 1;
  std::int64_t degree = 1;
  std::vector<Cyclotomic> values;  // per scanned class
};

struct Evaluation {
  bool ok_full = true;
  bool ok_nontrivial = true;
  std::vector<HelpWitness> witnesses;
  std::vector<std::vector<std::string>> multiset;  // per signature, sorted
};

class Evaluator {
 public:
  Evaluator(const ElementaryAbelian& u, std::vector<ThetaSignature> sigs)
      : u_(u), sigs_(std::move(sigs)), scale_(Rational(u.order())) {
    pairing_.resize(static_cast<std::size_t>(u.order()) * u.order());
    for (int c = 0; c < u.order(); ++c) {
      auto chi = u.exponents(c);
      for (int w = 0; w < u.order(); ++w) pairing_[c * u.order() + w] = u.pairing(chi, w);
    }
  }

  // assign[s] is the scanned-class index of subgroup s.
  Evaluation run(const std::vector<int>& assign, int x, bool witnesses, bool multiset) const {
    Evaluation ev;
    if (multiset) ev.multiset.resize(sigs_.size());
    const int p = u_.p();
    const std::size_t nclasses = sigs_.empty() ? 0 : sigs_.front().values.size();
    for (int c = 0; c < u_.order(); ++c) {
      const bool trivial = c == 0;
      if (!witnesses && !multiset && !ev.ok_full && !ev.ok_nontrivial) break;
      std::vector<std::vector<Rational>> counts(nclasses, std::vector<Rational>(p, Rational(0)));
      for (int w = 1; w < u_.order(); ++w) {
        int e = (p - pairing_[c * u_.order() + w]) % p;
        counts[assign[u_.subgroup_of(w)]][e] += 1;
      }
      std::vector<Cyclotomic> polys;
      polys.reserve(nclasses);
      for (auto& cnt : counts) polys.emplace_back(p, std::move(cnt));
      for (std::size_t s = 0; s < sigs_.size(); ++s) {
        const auto& sig = sigs_[s];
        Cyclotomic val(Rational(sig.degree));
        for (std::size_t k = 0; k < nclasses; ++k) val += sig.values[k] * polys[k];
        val /= scale_;
        if (multiset) ev.multiset[s].push_back(val.to_string());
        std::string reason;
        if (!val.is_rational()) {
          reason = "non-rational";
        } else {
          Rational r = val.as_rational();
          if (!is_integer(r)) reason = "non-integral";
          else if (r < 0) reason = "negative";
        }
        if (reason.empty()) continue;
        ev.ok_full = false;
        if (!trivial) ev.ok_nontrivial = false;
        if (witnesses) ev.witnesses.push_back({x, sig.name, sig.shared, u_.exponents(c), val, reason});
      }
    }
    if (multiset)
      for (auto& m : ev.multiset) std::sort(m.begin(), m.end());
    return ev;
  }

 private:
  const ElementaryAbelian& u_;
  std::vector<ThetaSignature> sigs_;
  Cyclotomic scale_;
  std::vector<int> pairing_;
};

std::vector<int> prefix(int n, int x) {
  std::vector<int> a(n, 1);
  std::fill(a.begin(), a.begin() + x, 0);
  return a;
}

}  // namespace

const HelpWitness* HelpScan::headline_witness(int x) const {
  for (const auto& c : counts) {
    if (c.x != x || c.witnesses.empty()) continue;
    for (const auto& w : c.witnesses)
      if (w.reason == "non-integral") return &w;
    return &c.witnesses.front();
  }
  return nullptr;
}

HelpScan feasible_distributions(const TableSlice& table, int p, int rank, const ScanOptions& options) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (rank < 2 || rank > 3) throw PreconditionFailed("rank must be 2 or 3");

  HelpScan scan;
  scan.group = table.group;
  scan.p = p;
  scan.rank = rank;
  for (const auto& c : table.classes)
    if (c.element_order == p) scan.classes.push_back(c.id);
  ElementaryAbelian u(p, rank);
  scan.num_subgroups = u.num_subgroups();

  if (scan.classes.size() == 1) {
    // One class of elements of order p: every assignment is the same one.
    scan.p2_early_exit = true;
    scan.feasible = {scan.num_subgroups};
    scan.feasible_nontrivial_only = scan.feasible;
    CountResult only;
    only.x = scan.num_subgroups;
    only.feasible = only.feasible_nontrivial_only = true;
    only.mode = "single-class";
    scan.counts.push_back(only);
    return scan;
  }
  if (scan.classes.size() != 2)
    throw PreconditionFailed(table.group + " does not have exactly two classes of elements of order " +
                             std::to_string(p));

  std::vector<const CharSlice*> rows;
  if (options.thetas.empty()) {
    for (const auto& c : table.chars) rows.push_back(&c);
  } else {
    for (const auto& name : options.thetas) rows.push_back(&table.find_char(name));
  }
  std::vector<ThetaSignature> sigs;
  for (const auto* row : rows) {
    std::vector<Cyclotomic> vals;
    for (const auto& cls : scan.classes) vals.push_back(row->at(cls));
    auto it = std::find_if(sigs.begin(), sigs.end(),
                           [&](const auto& s) { return s.degree == row->degree && s.values == vals; });
    if (it != sigs.end()) {
      ++it->shared;
    } else {
      sigs.push_back({row->name, 1, row->degree, std::move(vals)});
    }
  }
  Evaluator evaluator(u, sigs);
  const int n = scan.num_subgroups;
  if (rank >= 3 && n > options.max_exhaustive_subgroups)
    throw TooLarge("exhaustive assignment scan over 2^" + std::to_string(n) + " assignments");

  scan.counts.resize(n + 1);
  parallel_for(static_cast<std::size_t>(n + 1), options.jobs, [&](std::size_t xi) {
    const int x = static_cast<int>(xi);
    CountResult& res = scan.counts[xi];
    res.x = x;
    auto rep = prefix(n, x);
    Evaluation base = evaluator.run(rep, x, true, true);
    res.witnesses = std::move(base.witnesses);

    std::vector<std::vector<int>> samples;
    std::vector<int> suffix(n, 0);
    std::fill(suffix.begin(), suffix.end() - x, 1);
    samples.push_back(suffix);
    std::mt19937 rng(1000003u * static_cast<unsigned>(x) + 17u);
    for (int k = 0; k < 3; ++k) {
      auto s = rep;
      std::shuffle(s.begin(), s.end(), rng);
      samples.push_back(std::move(s));
    }
    for (const auto& s : samples)
      if (evaluator.run(s, x, false, true).multiset != base.multiset) res.symmetric = false;

    if (rank == 2 && res.symmetric) {
      res.mode = "representative";
      res.assignments_checked = 1;
      res.feasible = base.ok_full;
      res.feasible_nontrivial_only = base.ok_nontrivial;
      res.feasible_assignments = base.ok_full ? 1 : 0;
      return;
    }
    if (n > options.max_exhaustive_subgroups)
      throw TooLarge("exhaustive assignment scan over 2^" + std::to_string(n) + " assignments");
    res.mode = "exhaustive";
    std::vector<int> a(n, 1);
    std::fill(a.begin(), a.begin() + x, 0);  // lexicographically least arrangement
    do {
      Evaluation ev = evaluator.run(a, x, false, false);
      ++res.assignments_checked;
      if (ev.ok_full) {
        ++res.feasible_assignments;
        res.feasible = true;
      }
      if (ev.ok_nontrivial) res.feasible_nontrivial_only = true;
    } while (std::next_permutation(a.begin(), a.end()));
  });

  for (const auto& c : scan.counts) {
    if (c.feasible) scan.feasible.push_back(c.x);
    if (c.feasible_nontrivial_only) scan.feasible_nontrivial_only.push_back(c.x);
  }
  return scan;
}

nlohmann::json to_json(const HelpScan& scan) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& c : scan.counts) {
    nlohmann::json wit = nlohmann::json::array();
    for (const auto& w : c.witnesses)
      wit.push_back({{"x", w.x},
                     {"theta", w.theta},
                     {"rows_sharing", w.rows_sharing},
                     {"chi", w.chi},
                     {"multiplicity", value_to_json(w.multiplicity)},
                     {"reason", w.reason}});
    counts.push_back({{"x", c.x},
                      {"feasible", c.feasible},
                      {"feasible_nontrivial_only", c.feasible_nontrivial_only},
                      {"symmetric", c.symmetric},
                      {"mode", c.mode},
                      {"assignments_checked", c.assignments_checked},
                      {"feasible_assignments", c.feasible_assignments},
                      {"witnesses", wit}});
  }
  return {{"group", scan.group},
          {"p", scan.p},
          {"rank", scan.rank},
          {"classes", scan.classes},
          {"num_subgroups", scan.num_subgroups},
          {"p2_early_exit", scan.p2_early_exit},
          {"feasible", scan.feasible},
          {"feasible_nontrivial_only", scan.feasible_nontrivial_only},
          {"filters_agree", scan.filters_agree()},
          {"counts", counts}};
}

}  // namespace grs
