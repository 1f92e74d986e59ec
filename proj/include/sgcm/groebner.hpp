#pragma once

#include <vector>

#include "sgcm/polynomial.hpp"

namespace sgcm {

/// A reduced Groebner basis: monic elements, no leading monomial divides
/// another, every tail fully reduced, sorted ascending by leading monomial.
/// Reduced bases are unique per (ideal, order), so equal ideals yield
/// identical objects.
struct GroebnerBasis {
  RingPtr ring;
  Order order;
  std::vector<Polynomial> elems;

  bool is_trivial_unit() const {
    return elems.size() == 1 && elems[0].is_constant() && !elems[0].is_zero();
  }
};

/// Full normal form of f modulo G: every monomial of the result is divisible
/// by no leading monomial of G. Deterministic (first divisor in basis order
/// wins). Throws DomainError when f's ring order differs from G's order.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// Buchberger's algorithm with normal selection (pairs by lcm degree, ties by
/// generator indices) and Gebauer-Moeller pair pruning, followed by
/// minimalization and full inter-reduction. Generators are canonically sorted
/// before pairing, so the result is deterministic.
GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> gens, Order order);

/// Exhaustive Buchberger criterion: every S-polynomial of G reduces to zero.
/// Quadratic and unpruned on purpose; test oracle, not a production path.
bool verify_groebner(const GroebnerBasis& G);

}  // namespace sgcm
