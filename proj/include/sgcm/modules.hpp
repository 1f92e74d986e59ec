#pragma once

#include <optional>
#include <vector>

#include "sgcm/ideal.hpp"

namespace sgcm {

/// A finite direct sum of cyclic graded modules R/I_1 (+) ... (+) R/I_c over
/// one ring. Every component ideal is proper. The empty sum is the zero
/// module (dimension -1).
class QuotientModule {
 public:
  QuotientModule(RingPtr ring, std::vector<Ideal> components);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Ideal>& components() const { return comps_; }
  int ncomponents() const { return static_cast<int>(comps_.size()); }
  bool is_zero_module() const { return comps_.empty(); }

  /// max over components of dim R/I_k; -1 for the zero module.
  int dim() const;

  /// Total vector-space length over the field.
  Length length() const;

 private:
  RingPtr ring_;
  std::vector<Ideal> comps_;
};

/// A graded submodule N of a QuotientModule M, stored componentwise as ideals
/// J_k with I_k <= J_k <= R; N = (+) J_k / I_k.
class Submodule {
 public:
  Submodule() = default;
  explicit Submodule(std::vector<Ideal> ideals) : ideals_(std::move(ideals)) {}

  const std::vector<Ideal>& ideals() const { return ideals_; }
  const Ideal& ideal(int k) const { return ideals_[static_cast<size_t>(k)]; }

  /// Componentwise containment I_k <= J_k, checked by generator membership.
  void validate(const QuotientModule& M) const;

 private:
  std::vector<Ideal> ideals_;
};

Submodule zero_submodule(const QuotientModule& M);
Submodule full_submodule(const QuotientModule& M);

/// inner <= outer as submodules of M (componentwise generator membership).
bool submodule_leq(const Submodule& inner, const Submodule& outer);
bool submodule_equal(const Submodule& a, const Submodule& b);

/// dim N = max over components of dim R/(I_k : J_k); -1 for the zero
/// submodule.
int submodule_dimension(const QuotientModule& M, const Submodule& N);

/// An ascending chain of submodules M_0 <= M_1 <= ... <= M_t = M with cached
/// dimensions.
class Filtration {
 public:
  Filtration(const QuotientModule& M, std::vector<Submodule> chain);

  const std::vector<Submodule>& chain() const { return chain_; }
  const Submodule& at(int i) const { return chain_[static_cast<size_t>(i)]; }
  /// Number of proper steps t (chain has t+1 entries).
  int t() const { return static_cast<int>(chain_.size()) - 1; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int i) const { return dims_[static_cast<size_t>(i)]; }

 private:
  std::vector<Submodule> chain_;
  std::vector<int> dims_;
};

/// The dimension condition: dims strictly increase along the chain and the
/// last member is M itself.
bool check_dimension_condition(const QuotientModule& M, const Filtration& F);

/// Irreducible decomposition of a monomial ideal by generator splitting:
/// components are generated by pure variable powers, none contains the
/// intersection of the others. Deterministic order.
std::vector<Ideal> monomial_irreducible_decomposition(const Ideal& I);

/// The dimension filtration D_0 < D_1 < ... < D_t = M: D_{i-1} is the
/// largest submodule of D_i of strictly smaller dimension, and D_0 is the
/// largest finite-length submodule (the ideal-level saturation at the
/// irrelevant maximal ideal). Component ideals must be monomial unless a
/// decomposition is supplied per component (empty optional = decompose here).
Filtration dimension_filtration(
    const QuotientModule& M,
    const std::vector<std::optional<std::vector<Ideal>>>& supplied = {});

/// Length of the subquotient upper/lower for nested submodules
/// lower <= upper of M; finite iff dim R/(J_k : J'_k) <= 0 for every
/// component, computed by degreewise Hilbert-function differences (graded
/// inputs only).
Length subquotient_length(const QuotientModule& M, const Submodule& lower,
                          const Submodule& upper);

/// Length of the largest finite-length submodule of M: componentwise
/// saturation length.
std::uint64_t h0_length(const QuotientModule& M);

/// The quotient module M/N as a new QuotientModule: components R/J_k, with
/// components where J_k = R dropped.
QuotientModule quotient_module(const QuotientModule& M, const Submodule& N);

}  // namespace sgcm
