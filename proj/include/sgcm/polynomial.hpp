#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "sgcm/ring.hpp"

namespace sgcm {

/// One coefficient-monomial pair.
struct Term {
  Monomial mono;
  mpq_class coeff;
};

/// Sparse polynomial in distributed form: terms strictly descending in the
/// ring's monomial order, no zero coefficients. The zero polynomial has no
/// terms. Value type; all arithmetic routes coefficients through the ring's
/// field.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Build from arbitrary terms: sorts, merges equal monomials, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    const Order& ord = ring_->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return mono_cmp(a.mono, b.mono, ord) > 0;
    });
    terms_.reserve(terms.size());
    for (auto& t : terms) {
      if (t.coeff == 0) continue;
      if (!terms_.empty() && terms_.back().mono == t.mono) {
        terms_.back().coeff = ring_->field().add(terms_.back().coeff, t.coeff);
        if (terms_.back().coeff == 0) terms_.pop_back();
      } else {
        terms_.push_back(std::move(t));
      }
    }
  }

  static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }

  static Polynomial constant(const RingPtr& ring, const mpq_class& c) {
    Polynomial p(ring);
    mpq_class cc = ring->field().make(c);
    if (cc != 0) p.terms_.push_back({Monomial(ring->nvars()), cc});
    return p;
  }

  static Polynomial monomial(const RingPtr& ring, const Monomial& m, const mpq_class& c = 1) {
    Polynomial p(ring);
    mpq_class cc = ring->field().make(c);
    if (cc != 0) p.terms_.push_back({m, cc});
    return p;
  }

  static Polynomial variable(const RingPtr& ring, int i) {
    return monomial(ring, Monomial::var(ring->nvars(), i));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Total degree; disengaged for the zero polynomial (callers must branch).
  std::optional<unsigned> degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_[0].mono.degree()) return false;
    return true;
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_[0].mono;
  }
  const mpq_class& leading_coeff() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_[0].coeff;
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->field().neg(t.coeff)});
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return merge(o, false); }
  Polynomial operator-(const Polynomial& o) const { return merge(o, true); }

  Polynomial operator*(const Polynomial& o) const {
    check_same_ring(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    const Field& F = ring_->field();
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, F.mul(a.coeff, b.coeff)});
    return Polynomial(ring_, std::move(prod));
  }

  /// Multiply by a single term; keeps sorted structure without re-sorting.
  Polynomial times_term(const Monomial& m, const mpq_class& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    const Field& F = ring_->field();
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
    return r;
  }

  Polynomial scaled(const mpq_class& c) const { return times_term(Monomial(ring_->nvars()), c); }

  /// Leading coefficient made 1.
  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scaled(ring_->field().inv(terms_[0].coeff));
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Deterministic total order for canonical generator lists: by leading
  /// monomial in the ring order, then term count, then termwise.
  static int cmp(const Polynomial& a, const Polynomial& b) {
    const Order& ord = a.ring_->order();
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
      int c = mono_cmp(a.terms_[i].mono, b.terms_[i].mono, ord);
      if (c != 0) return c;
      if (a.terms_[i].coeff != b.terms_[i].coeff)
        return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
  }

  std::string to_string() const;

  /// Same polynomial with denominators cleared and content divided out,
  /// leading coefficient positive: the canonical integer representative of
  /// the scalar class of this polynomial.
  Polynomial primitive_part() const;

 private:
  void check_same_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw DomainError("polynomial ring mismatch");
  }

  Polynomial merge(const Polynomial& o, bool subtract) const {
    check_same_ring(o);
    const Field& F = ring_->field();
    const Order& ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i == terms_.size()) c = -1;
      else if (j == o.terms_.size()) c = 1;
      else c = mono_cmp(terms_[i].mono, o.terms_[j].mono, ord);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const Term& t = o.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? F.neg(t.coeff) : t.coeff});
      } else {
        mpq_class s = subtract ? F.sub(terms_[i].coeff, o.terms_[j].coeff)
                               : F.add(terms_[i].coeff, o.terms_[j].coeff);
        if (s != 0) r.terms_.push_back({terms_[i].mono, s});
        ++i, ++j;
      }
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace sgcm
