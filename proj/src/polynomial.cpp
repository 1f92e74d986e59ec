#include "sgcm/polynomial.hpp"

namespace sgcm {

namespace {

void append_monomial(std::string& s, const PolyRing& ring, const Monomial& m) {
  bool first = true;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!first) s += "*";
    first = false;
    s += ring.var_name(i);
    if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    mpq_class c = t.coeff;
    bool neg = c < 0;
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    mpq_class ac = abs(c);
    if (t.mono.is_one()) {
      s += ac.get_str();
    } else {
      if (ac != 1) s += ac.get_str() + "*";
      append_monomial(s, *ring_, t.mono);
    }
  }
  return s;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  if (ring_->field().kind() == Field::Kind::prime) return monic();
  mpz_class den_lcm(1), num_gcd(0);
  for (const auto& t : terms_) {
    mpz_class d = t.coeff.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  for (const auto& t : terms_) {
    mpz_class n = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_[0].coeff * scale < 0) scale = -scale;
  return scaled(scale);
}

}  // namespace sgcm
