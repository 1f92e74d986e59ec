#include "sgcm/ideal.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sgcm {

namespace {

// Name of the transient elimination variable; rejected by the user-facing
// parser, so it can never clash with ring variables.
const char* kAuxVar = "#t";

RingPtr extended_ring(const RingPtr& ring) {
  std::vector<std::string> vars = ring->vars();
  vars.push_back(kAuxVar);
  return make_ring(ring->field(), std::move(vars), Order::elim(1));
}

Polynomial lift(const Polynomial& f, const RingPtr& big) {
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m(big->nvars());
    for (int i = 0; i < t.mono.nvars(); ++i) m.set_exp(i, t.mono.exp(i));
    ts.push_back({m, t.coeff});
  }
  return Polynomial(big, std::move(ts));
}

Polynomial drop_last_var(const Polynomial& f, const RingPtr& small) {
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m(small->nvars());
    for (int i = 0; i < small->nvars(); ++i) m.set_exp(i, t.mono.exp(i));
    if (t.mono.exp(small->nvars()) != 0)
      throw DomainError("internal: eliminated variable survived");
    ts.push_back({m, t.coeff});
  }
  return Polynomial(small, std::move(ts));
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_)) throw DomainError("ideal generator from a different ring");
    gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end(),
            [](const Polynomial& a, const Polynomial& b) { return Polynomial::cmp(a, b) < 0; });
  gens_.erase(std::unique(gens_.begin(), gens_.end(),
                          [](const Polynomial& a, const Polynomial& b) { return a == b; }),
              gens_.end());
}

Ideal Ideal::irrelevant(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

bool Ideal::is_monomial() const {
  for (const auto& g : gens_)
    if (!g.is_monomial()) return false;
  return true;
}

bool Ideal::is_squarefree_monomial() const {
  for (const auto& g : gens_) {
    if (!g.is_monomial()) return false;
    const Monomial& m = g.terms()[0].mono;
    for (int i = 0; i < m.nvars(); ++i)
      if (m.exp(i) > 1) return false;
  }
  return true;
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner_ptr(const Order& order) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->gb.find(order);
    if (it != cache_->gb.end()) return it->second;
  }
  auto gb = std::make_shared<const GroebnerBasis>(buchberger(ring_, gens_, order));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->gb.emplace(order, gb);
  return it->second;  // first writer wins
}

const GroebnerBasis& Ideal::groebner() const { return *groebner_ptr(ring_->order()); }
const GroebnerBasis& Ideal::groebner(const Order& order) const { return *groebner_ptr(order); }

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return normal_form(f, groebner()).is_zero();
}

bool Ideal::contains(const Ideal& o) const {
  for (const auto& g : o.gens_)
    if (!contains(g)) return false;
  return true;
}

int Ideal::dim_quotient() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->dim) return *cache_->dim;
  }
  const GroebnerBasis& G = groebner();
  const int n = ring_->nvars();
  int best = -1;
  // A set S of variables is independent iff no leading monomial is supported
  // inside S; dim R/I is the largest independent set (combinatorial
  // dimension of the leading-term ideal). The empty set is independent iff
  // 1 is not a leading monomial, i.e. iff I is proper.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& g : G.elems) {
      const Monomial& lm = g.leading_monomial();
      bool inside = true;
      for (int i = 0; i < n && inside; ++i)
        if (lm.exp(i) > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->dim) cache_->dim = best;
  return *cache_->dim;
}

namespace {

bool is_standard(const Monomial& m, const GroebnerBasis& G) {
  for (const auto& g : G.elems)
    if (g.leading_monomial().divides(m)) return false;
  return true;
}

}  // namespace

Length Ideal::quotient_length() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->length) return *cache_->length;
  }
  Length result;
  if (dim_quotient() >= 1) {
    result = Length::infinite();
  } else {
    // Standard monomials are closed under division, so a BFS from 1 through
    // standard monomials enumerates all of them.
    const GroebnerBasis& G = groebner();
    const int n = ring_->nvars();
    std::set<Monomial> seen;
    std::vector<Monomial> frontier;
    Monomial one(n);
    if (is_standard(one, G)) {
      seen.insert(one);
      frontier.push_back(one);
    }
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (const auto& m : frontier) {
        for (int i = 0; i < n; ++i) {
          Monomial child = m;
          child.set_exp(i, child.exp(i) + 1);
          if (seen.count(child) || !is_standard(child, G)) continue;
          seen.insert(child);
          next.push_back(child);
        }
      }
      frontier = std::move(next);
    }
    result = Length::finite(seen.size());
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->length) cache_->length = result;
  return *cache_->length;
}

std::vector<std::uint64_t> Ideal::hilbert_values(unsigned dmax) const {
  // Level-by-level BFS: every standard monomial of degree d is x_i times a
  // standard monomial of degree d-1 (closure under division).
  const GroebnerBasis& G = groebner();
  const int n = ring_->nvars();
  std::vector<std::uint64_t> values;
  values.reserve(dmax + 1);
  std::set<Monomial> level;
  Monomial one(n);
  if (is_standard(one, G)) level.insert(one);
  values.push_back(level.size());
  for (unsigned d = 1; d <= dmax; ++d) {
    std::set<Monomial> next;
    for (const auto& m : level) {
      for (int i = 0; i < n; ++i) {
        Monomial child = m;
        child.set_exp(i, child.exp(i) + 1);
        if (is_standard(child, G)) next.insert(child);
      }
    }
    level = std::move(next);
    values.push_back(level.size());
  }
  return values;
}

std::uint64_t Ideal::hilbert_function(unsigned d) const { return hilbert_values(d).back(); }

std::optional<unsigned> Ideal::power_of_irrelevant() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->mpower) return *cache_->mpower;
  }
  std::optional<unsigned> result;
  if (dim_quotient() <= 0) {
    const GroebnerBasis& G = groebner();
    const int n = ring_->nvars();
    constexpr unsigned kCap = 512;  // unreachable for sane inputs
    for (unsigned N = 0; N <= kCap; ++N) {
      // All degree-N monomials must lie in the ideal (normal form zero).
      bool all_in = true;
      std::vector<unsigned> exps(static_cast<size_t>(n), 0);
      // Enumerate compositions of N into n parts.
      std::function<bool(int, unsigned)> walk = [&](int pos, unsigned rest) -> bool {
        if (pos == n - 1) {
          exps[static_cast<size_t>(pos)] = rest;
          Monomial m(n);
          for (int i = 0; i < n; ++i) m.set_exp(i, exps[static_cast<size_t>(i)]);
          return normal_form(Polynomial::monomial(ring_, m), G).is_zero();
        }
        for (unsigned e = 0; e <= rest; ++e) {
          exps[static_cast<size_t>(pos)] = e;
          if (!walk(pos + 1, rest - e)) return false;
        }
        return true;
      };
      all_in = walk(0, N);
      if (all_in) {
        result = N;
        break;
      }
    }
    if (!result) throw DomainError("internal: no power of the irrelevant ideal fits");
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->mpower) cache_->mpower = result;
  return *cache_->mpower;
}

std::string Ideal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw DomainError("ideal_equal: ring mismatch");
  const auto& ga = a.groebner().elems;
  const auto& gb = b.groebner().elems;
  if (ga.size() != gb.size()) return false;
  for (size_t i = 0; i < ga.size(); ++i)
    if (ga[i] != gb[i]) return false;
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw DomainError("ideal_sum: ring mismatch");
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw DomainError("ideal_product: ring mismatch");
  std::vector<Polynomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw DomainError("ideal_intersection: ring mismatch");
  const RingPtr& ring = a.ring();
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(ring);
  RingPtr big = extended_ring(ring);
  Polynomial t = Polynomial::variable(big, big->nvars() - 1);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens()) gens.push_back(t * lift(f, big));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * lift(g, big));
  GroebnerBasis G = buchberger(big, std::move(gens), big->order());
  std::vector<Polynomial> kept;
  for (const auto& e : G.elems) {
    bool has_aux = false;
    for (const auto& tm : e.terms())
      if (tm.mono.exp(big->nvars() - 1) != 0) has_aux = true;
    if (!has_aux) kept.push_back(drop_last_var(e, ring));
  }
  return Ideal(ring, std::move(kept));
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const RingPtr& ring = f.ring();
  const Field& F = ring->field();
  Polynomial rest = f;
  Polynomial quotient(ring);
  while (!rest.is_zero()) {
    if (!g.leading_monomial().divides(rest.leading_monomial())) return std::nullopt;
    Monomial m = rest.leading_monomial() / g.leading_monomial();
    mpq_class c = F.div(rest.leading_coeff(), g.leading_coeff());
    quotient = quotient + Polynomial::monomial(ring, m, c);
    rest = rest - g.times_term(m, c);
  }
  return quotient;
}

Ideal ideal_colon(const Ideal& a, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("colon by the zero polynomial");
  const RingPtr& ring = a.ring();
  if (a.is_zero_ideal()) return Ideal::zero(ring);
  Ideal common = ideal_intersection(a, Ideal(ring, {f}));
  std::vector<Polynomial> gens;
  for (const auto& h : common.gens()) {
    auto q = divide_exact(h, f);
    if (!q) throw DomainError("internal: intersection element not divisible in colon");
    gens.push_back(std::move(*q));
  }
  return Ideal(ring, std::move(gens));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw DomainError("ideal_colon: ring mismatch");
  if (b.is_zero_ideal()) throw DomainError("colon by the zero ideal");
  bool first = true;
  Ideal acc;
  for (const auto& g : b.gens()) {
    Ideal part = ideal_colon(a, g);
    acc = first ? part : ideal_intersection(acc, part);
    first = false;
  }
  return acc;
}

Ideal saturation(const Ideal& a, const Ideal& b) {
  Ideal current = a;
  for (;;) {
    Ideal next = ideal_colon(current, b);
    if (ideal_equal(next, current)) return current;
    current = next;
  }
}

}  // namespace sgcm
