#include "sgcm/groebner.hpp"

#include <algorithm>
#include <queue>

namespace sgcm {

namespace {

/// Reduce f against a working basis (not necessarily reduced). Full normal
/// form: head reduction where possible, otherwise the leading term moves to
/// the remainder. Deterministic: the first divisor in basis order wins.
Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& basis) {
  const RingPtr& ring = f.ring();
  const Field& F = ring->field();
  Polynomial remainder(ring);
  while (!f.is_zero()) {
    const Monomial& lm = f.leading_monomial();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      mpq_class c = F.div(f.leading_coeff(), divisor->leading_coeff());
      f = f - divisor->times_term(lm / divisor->leading_monomial(), c);
    } else {
      remainder = remainder + Polynomial::monomial(ring, lm, f.leading_coeff());
      f = f - Polynomial::monomial(ring, lm, f.leading_coeff());
    }
  }
  return remainder;
}

struct Pair {
  unsigned deg;  // total degree of lcm(lm_i, lm_j): normal selection key
  int i, j;
  Monomial lcm;
  bool operator>(const Pair& o) const {
    if (deg != o.deg) return deg > o.deg;
    if (i != o.i) return i > o.i;
    return j > o.j;
  }
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (!same_ring(f.ring(), G.ring)) throw DomainError("normal_form: ring mismatch");
  if (!(f.ring()->order() == G.order)) throw DomainError("normal_form: monomial order mismatch");
  return reduce_full(f, G.elems);
}

GroebnerBasis buchberger(const RingPtr& ring_in, std::vector<Polynomial> gens, Order order) {
  // Work over a ring carrying the requested order so every comparison below
  // (and every polynomial built here) uses it.
  RingPtr ring = (ring_in->order() == order)
                     ? ring_in
                     : make_ring(ring_in->field(), ring_in->vars(), order);
  for (auto& g : gens) {
    if (!same_ring(g.ring(), ring)) {
      std::vector<Term> ts(g.terms().begin(), g.terms().end());
      g = Polynomial(ring, std::move(ts));
    }
  }

  // Canonical input: drop zeros, make monic, sort, dedupe.
  std::vector<Polynomial> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic());
  std::sort(basis.begin(), basis.end(),
            [](const Polynomial& a, const Polynomial& b) { return Polynomial::cmp(a, b) < 0; });
  basis.erase(std::unique(basis.begin(), basis.end(),
                          [](const Polynomial& a, const Polynomial& b) { return a == b; }),
              basis.end());

  GroebnerBasis result{ring, order, {}};
  if (basis.empty()) return result;

  std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> queue;

  // New pairs for basis element j against everything before it, pruned by
  // Buchberger's coprimality criterion and the Gebauer-Moeller minimal-lcm
  // rule (drop a fresh pair when another fresh pair's lcm properly divides
  // its lcm; among equal lcms keep the smallest index).
  auto push_pairs_for = [&](int j) {
    const Monomial& lmj = basis[static_cast<size_t>(j)].leading_monomial();
    std::vector<Pair> fresh;
    for (int i = 0; i < j; ++i) {
      const Monomial& lmi = basis[static_cast<size_t>(i)].leading_monomial();
      if (lmi.coprime(lmj)) continue;
      fresh.push_back({0, i, j, Monomial::lcm(lmi, lmj)});
    }
    for (auto& p : fresh) {
      bool dominated = false;
      for (auto& q : fresh) {
        if (&p == &q) continue;
        if (q.lcm.divides(p.lcm) && (p.lcm != q.lcm || q.i < p.i)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) {
        p.deg = p.lcm.degree();
        queue.push(p);
      }
    }
  };

  for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    Pair p = queue.top();
    queue.pop();
    const Polynomial& f = basis[static_cast<size_t>(p.i)];
    const Polynomial& g = basis[static_cast<size_t>(p.j)];
    Polynomial s = f.times_term(p.lcm / f.leading_monomial(), 1) -
                   g.times_term(p.lcm / g.leading_monomial(), 1);
    Polynomial r = reduce_full(std::move(s), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    push_pairs_for(static_cast<int>(basis.size()) - 1);
  }

  // Minimal basis: drop elements whose leading monomial another divides.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& lmj = basis[j].leading_monomial();
      if (lmj.divides(basis[i].leading_monomial()) &&
          (lmj != basis[i].leading_monomial() || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Inter-reduce tails. Leading monomials are pairwise indivisible, so heads
  // survive and one pass yields the unique reduced basis.
  std::vector<Polynomial> reduced = minimal;
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(reduced.size() - 1);
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = reduce_full(reduced[i], others).monic();
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_cmp(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  result.elems = std::move(reduced);
  return result;
}

bool verify_groebner(const GroebnerBasis& G) {
  for (size_t i = 0; i < G.elems.size(); ++i) {
    for (size_t j = i + 1; j < G.elems.size(); ++j) {
      const Polynomial& f = G.elems[i];
      const Polynomial& g = G.elems[j];
      Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
      Polynomial s = f.times_term(l / f.leading_monomial(), G.ring->field().inv(f.leading_coeff())) -
                     g.times_term(l / g.leading_monomial(), G.ring->field().inv(g.leading_coeff()));
      if (!reduce_full(std::move(s), G.elems).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace sgcm
