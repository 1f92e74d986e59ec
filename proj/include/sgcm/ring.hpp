#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "sgcm/field.hpp"

namespace sgcm {

/// Hard cap on ring size: up to 7 user variables plus one transient
/// elimination variable.
inline constexpr int kMaxVars = 8;

/// Monomial order tag. grevlex is the default everywhere; elimination orders
/// exist only transiently inside intersection/colon computations and
/// eliminate the trailing `elim_tail` variables.
struct Order {
  enum class Kind { grevlex, lex, elim };
  Kind kind = Kind::grevlex;
  int elim_tail = 0;

  static Order grevlex() { return {Kind::grevlex, 0}; }
  static Order lex() { return {Kind::lex, 0}; }
  static Order elim(int tail) { return {Kind::elim, tail}; }

  bool operator==(const Order& o) const { return kind == o.kind && elim_tail == o.elim_tail; }
  bool operator<(const Order& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    return elim_tail < o.elim_tail;
  }
};

/// Exponent vector with cached total degree. Fixed storage for kMaxVars.
class Monomial {
 public:
  Monomial() : nvars_(0), deg_(0) { exps_.fill(0); }
  explicit Monomial(int nvars) : nvars_(nvars), deg_(0) { exps_.fill(0); }

  int nvars() const { return nvars_; }
  unsigned degree() const { return deg_; }
  unsigned exp(int i) const { return exps_[static_cast<size_t>(i)]; }

  void set_exp(int i, unsigned e) {
    deg_ = deg_ - exps_[static_cast<size_t>(i)] + e;
    exps_[static_cast<size_t>(i)] = static_cast<std::uint16_t>(e);
  }

  bool is_one() const { return deg_ == 0; }

  bool operator==(const Monomial& o) const {
    return nvars_ == o.nvars_ && deg_ == o.deg_ && exps_ == o.exps_;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  /// Plain lexicographic tie-break order; used only for canonical containers,
  /// not as a monomial order.
  bool operator<(const Monomial& o) const {
    if (deg_ != o.deg_) return deg_ < o.deg_;
    return exps_ < o.exps_;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i) r.exps_[static_cast<size_t>(i)] = exps_[static_cast<size_t>(i)] + o.exps_[static_cast<size_t>(i)];
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < nvars_; ++i)
      if (exps_[static_cast<size_t>(i)] > o.exps_[static_cast<size_t>(i)]) return false;
    return true;
  }

  /// Quotient this / o; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const {
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i) r.exps_[static_cast<size_t>(i)] = exps_[static_cast<size_t>(i)] - o.exps_[static_cast<size_t>(i)];
    r.deg_ = deg_ - o.deg_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    unsigned d = 0;
    for (int i = 0; i < a.nvars_; ++i) {
      std::uint16_t e = std::max(a.exps_[static_cast<size_t>(i)], b.exps_[static_cast<size_t>(i)]);
      r.exps_[static_cast<size_t>(i)] = e;
      d += e;
    }
    r.deg_ = d;
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < nvars_; ++i)
      if (exps_[static_cast<size_t>(i)] && o.exps_[static_cast<size_t>(i)]) return false;
    return true;
  }

  static Monomial var(int nvars, int i, unsigned e = 1) {
    Monomial r(nvars);
    r.set_exp(i, e);
    return r;
  }

 private:
  std::array<std::uint16_t, kMaxVars> exps_;
  std::int16_t nvars_;
  std::uint32_t deg_;
};

/// Three-way comparison of monomials under `ord`: negative when a < b,
/// zero when equal, positive when a > b.
inline int mono_cmp(const Monomial& a, const Monomial& b, const Order& ord) {
  const int n = a.nvars();
  switch (ord.kind) {
    case Order::Kind::lex: {
      for (int i = 0; i < n; ++i) {
        int d = static_cast<int>(a.exp(i)) - static_cast<int>(b.exp(i));
        if (d != 0) return d;
      }
      return 0;
    }
    case Order::Kind::elim: {
      unsigned ta = 0, tb = 0;
      for (int i = n - ord.elim_tail; i < n; ++i) {
        ta += a.exp(i);
        tb += b.exp(i);
      }
      if (ta != tb) return ta < tb ? -1 : 1;
      [[fallthrough]];
    }
    case Order::Kind::grevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (int i = n - 1; i >= 0; --i) {
        int d = static_cast<int>(a.exp(i)) - static_cast<int>(b.exp(i));
        if (d != 0) return d < 0 ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

/// A standard-graded polynomial ring over a Field, with named variables and a
/// monomial order. Immutable; shared by pointer between all objects built on
/// it. Two rings are interchangeable iff content-equal (same field, variable
/// names, order).
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> vars, Order order = Order::grevlex())
      : field_(field), vars_(std::move(vars)), order_(order) {
    if (vars_.empty() || vars_.size() > kMaxVars)
      throw InputError("ring must have between 1 and " + std::to_string(kMaxVars) + " variables");
  }

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(int i) const { return vars_[static_cast<size_t>(i)]; }
  const Order& order() const { return order_; }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
  }
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string s = field_.to_string() + "[";
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (i) s += ",";
      s += vars_[i];
    }
    return s + "]";
  }

 private:
  Field field_;
  std::vector<std::string> vars_;
  Order order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(Field f, std::vector<std::string> vars, Order ord = Order::grevlex()) {
  return std::make_shared<const PolyRing>(f, std::move(vars), ord);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace sgcm
