#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "sgcm/groebner.hpp"
#include "sgcm/length.hpp"

namespace sgcm {

/// An ideal of a polynomial ring, held by a canonically sorted generator
/// list. Immutable value type: every operation returns a new ideal. A cache
/// of derived data (reduced Groebner bases per order, dimension, length) is
/// shared between copies and filled at most once per key; concurrent readers
/// are safe, racing writers both compute the same value and the first one
/// wins.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal full(const RingPtr& ring) {
    return Ideal(ring, {Polynomial::constant(ring, 1)});
  }
  /// The irrelevant maximal ideal (x_1, ..., x_n).
  static Ideal irrelevant(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_monomial() const;
  bool is_squarefree_monomial() const;
  bool is_homogeneous() const;

  /// Reduced Groebner basis; cached per order. Default: the ring's order.
  const GroebnerBasis& groebner() const;
  const GroebnerBasis& groebner(const Order& order) const;

  /// Ideal membership via zero normal form.
  bool contains(const Polynomial& f) const;
  /// Componentwise membership of o's generators.
  bool contains(const Ideal& o) const;
  bool is_full_ring() const { return contains(Polynomial::constant(ring_, 1)); }

  /// Krull dimension of R/I; -1 when I = R. Computed from the leading-term
  /// ideal: the largest set of variables supporting no leading monomial.
  int dim_quotient() const;

  /// Vector-space length of R/I over the field: the number of standard
  /// monomials; infinite iff dim R/I >= 1.
  Length quotient_length() const;

  /// Number of standard monomials of total degree exactly d (the Hilbert
  /// function of R/lt(I)).
  std::uint64_t hilbert_function(unsigned d) const;
  /// Hilbert function values for all degrees 0..dmax in one pass.
  std::vector<std::uint64_t> hilbert_values(unsigned dmax) const;

  /// Smallest N with m^N contained in I (m the irrelevant ideal), tested by
  /// normal-form membership of every degree-N monomial; disengaged when
  /// dim R/I > 0 (no power fits).
  std::optional<unsigned> power_of_irrelevant() const;

  bool operator==(const Ideal& o) const = delete;  // use equals(): GB comparison

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<Order, std::shared_ptr<const GroebnerBasis>> gb;
    std::optional<int> dim;
    std::optional<Length> length;
    std::optional<std::optional<unsigned>> mpower;
  };

  std::shared_ptr<const GroebnerBasis> groebner_ptr(const Order& order) const;

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Equality of ideals (not of generator lists): identical reduced bases.
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

/// Intersection via a transient elimination variable t:
/// (t*a + (1-t)*b) ∩ R.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// Colon ideal (a : f) = { h : h*f in a }, via (a ∩ (f)) / f.
Ideal ideal_colon(const Ideal& a, const Polynomial& f);
/// Colon ideal (a : b) = intersection of (a : g) over generators g of b.
/// Throws DomainError when b is the zero ideal.
Ideal ideal_colon(const Ideal& a, const Ideal& b);

/// Saturation (a : b^inf) by iterating colon until the basis stabilizes.
Ideal saturation(const Ideal& a, const Ideal& b);

/// Exact division f / g; disengaged when g does not divide f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace sgcm
