#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sgcm {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (files, CLI arguments, declarations).
struct InputError : Error {
  using Error::Error;
};

/// A mathematical precondition of an operation does not hold.
struct DomainError : Error {
  using Error::Error;
};

/// Coefficient domain: the rationals, or a prime field Z/p with p < 2^31.
///
/// Scalars are stored as mpq_class in both cases; prime-field values keep the
/// canonical representative in [0, p) with denominator 1, so equality of
/// scalars is plain mpq equality.
class Field {
 public:
  enum class Kind { rationals, prime };

  Field() : kind_(Kind::rationals), p_(0) {}
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p) {
    Field f;
    f.kind_ = Kind::prime;
    f.p_ = p;
    if (p < 2 || !is_prime(p)) throw InputError("field characteristic must be a prime < 2^31");
    return f;
  }

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return kind_ == Kind::prime ? p_ : 0; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  mpq_class zero() const { return mpq_class(0); }
  mpq_class one() const { return mpq_class(1); }

  /// Canonicalize an arbitrary rational into this field.
  mpq_class make(const mpq_class& a) const {
    if (kind_ == Kind::rationals) {
      mpq_class r = a;
      r.canonicalize();
      return r;
    }
    mpq_class r = a;
    r.canonicalize();
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class p(p_);
    num %= p;
    if (num < 0) num += p;
    if (den != 1) {
      mpz_class dinv;
      mpz_class dmod = den % p;
      if (dmod < 0) dmod += p;
      if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DomainError("division by zero in prime field");
      num = (num * dinv) % p;
    }
    return mpq_class(num);
  }
  mpq_class make(long a) const { return make(mpq_class(a)); }

  mpq_class add(const mpq_class& a, const mpq_class& b) const { return reduce(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return reduce(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return reduce(a * b); }
  mpq_class neg(const mpq_class& a) const { return reduce(-a); }

  mpq_class inv(const mpq_class& a) const {
    if (a == 0) throw DomainError("division by zero");
    if (kind_ == Kind::rationals) return 1 / a;
    mpz_class ainv, p(p_);
    mpz_class an = a.get_num() % p;
    if (an < 0) an += p;
    if (mpz_invert(ainv.get_mpz_t(), an.get_mpz_t(), p.get_mpz_t()) == 0)
      throw DomainError("division by zero in prime field");
    return mpq_class(ainv);
  }
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

  std::string to_string() const {
    return kind_ == Kind::rationals ? "Q" : "Fp(" + std::to_string(p_) + ")";
  }

 private:
  mpq_class reduce(const mpq_class& a) const {
    if (kind_ == Kind::rationals) {
      mpq_class r = a;
      r.canonicalize();
      return r;
    }
    // Operands are canonical residues, so sums/products have denominator 1.
    mpz_class num = a.get_num() % mpz_class(p_);
    if (num < 0) num += p_;
    return mpq_class(num);
  }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  Kind kind_;
  std::uint32_t p_;
};

}  // namespace sgcm
