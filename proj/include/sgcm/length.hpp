#pragma once

#include <cstdint>
#include <string>

#include "sgcm/field.hpp"

namespace sgcm {

/// A vector-space length: a natural number or infinity. Arithmetic saturates
/// at infinity; value() on an infinite length throws.
class Length {
 public:
  Length() : finite_(true), v_(0) {}
  static Length finite(std::uint64_t v) {
    Length l;
    l.finite_ = true;
    l.v_ = v;
    return l;
  }
  static Length infinite() {
    Length l;
    l.finite_ = false;
    l.v_ = 0;
    return l;
  }

  bool is_finite() const { return finite_; }
  std::uint64_t value() const {
    if (!finite_) throw DomainError("length is infinite");
    return v_;
  }

  Length operator+(const Length& o) const {
    if (!finite_ || !o.finite_) return infinite();
    return finite(v_ + o.v_);
  }
  Length& operator+=(const Length& o) {
    *this = *this + o;
    return *this;
  }

  bool operator==(const Length& o) const { return finite_ == o.finite_ && v_ == o.v_; }
  bool operator!=(const Length& o) const { return !(*this == o); }

  std::string to_string() const { return finite_ ? std::to_string(v_) : "infinite"; }

 private:
  bool finite_;
  std::uint64_t v_;
};

/// Binomial coefficient under the convention used throughout: zero unless
/// 0 <= b <= a. Arguments may be negative.
inline long long binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace sgcm
