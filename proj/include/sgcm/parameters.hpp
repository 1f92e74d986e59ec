#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgcm/modules.hpp"

namespace sgcm {

/// Powers (x_1^{n_1}, ..., x_s^{n_s}) of a parameter sequence.
std::vector<Polynomial> parameter_powers(const std::vector<Polynomial>& x,
                                         const std::vector<unsigned>& n);

/// ell(M / (x_1^{n_1},...,x_d^{n_d}) M), summed over components. Throws
/// DomainError("not a system of parameters") when the quotient has infinite
/// length. Omitted n means (1,...,1).
std::uint64_t quotient_length(const QuotientModule& M, const std::vector<Polynomial>& x,
                              const std::vector<unsigned>& n = {});

/// Whether x is a system of parameters of M: |x| = dim M (required, throws
/// InputError otherwise) and M/xM has finite length.
bool is_sop(const QuotientModule& M, const std::vector<Polynomial>& x);

/// Whether the system of parameters x is good with respect to F:
/// M_i n (x_{d_i+1},...,x_d)M = 0 for every i < t. A non-sop is never good.
/// F must satisfy the dimension condition.
bool is_good_sop(const QuotientModule& M, const Filtration& F,
                 const std::vector<Polynomial>& x);

/// Whether x_1,...,x_s is a d-sequence on M:
/// (x_1,...,x_{i-1})M : x_i x_j = (x_1,...,x_{i-1})M : x_j for all j >= i.
bool is_d_sequence(const QuotientModule& M, const std::vector<Polynomial>& x);

/// Whether x_1,...,x_s is a dd-sequence on M, tested on the finite exponent
/// grid 1 <= n_j <= bound: (x_1^{n_1},...,x_i^{n_i}) must be a d-sequence on
/// M/(x_{i+1}^{n_{i+1}},...,x_s^{n_s})M for every i and every grid point.
bool is_dd_sequence(const QuotientModule& M, const std::vector<Polynomial>& x,
                    unsigned bound = 2);

/// Serre multiplicity e(x_1,...,x_s; N) for a submodule N of M with
/// s = dim N, computed as the mixed finite difference of
/// ell(N / (x_1^{n_1},...,x_s^{n_s})N) at base point (2,...,2) and certified
/// by recomputation at (3,...,3). For s = 0 returns ell(N).
long long multiplicity(const QuotientModule& M, const Submodule& N,
                       const std::vector<Polynomial>& x_prefix);

/// e(x_1,...,x_{d_i}; M_i) for every member of a filtration; entry i = t is
/// e(x; M). Members of dimension <= 0 contribute their length. Verifies that
/// x is a good system of parameters with respect to F (DomainError if not).
struct MultiplicityTable {
  std::vector<long long> e;  // indexed by filtration position 0..t
};
MultiplicityTable multiplicity_table(const QuotientModule& M, const Filtration& F,
                                     const std::vector<Polynomial>& x);

/// The difference function
///   ell(M/x(n)M) - sum_i n_1...n_{d_i} e(x_1,...,x_{d_i}; M_i)
/// at the exponent vector n (all entries >= 1).
long long ifm_value(const QuotientModule& M, const Filtration& F,
                    const std::vector<Polynomial>& x, const std::vector<unsigned>& n,
                    const MultiplicityTable& table);
long long ifm_value(const QuotientModule& M, const Filtration& F,
                    const std::vector<Polynomial>& x, const std::vector<unsigned>& n);

/// Randomized search for a good system of parameters with respect to F. The
/// entry at position j must annihilate the largest member of dimension < j,
/// so its candidate pool is built from that annihilator: homogeneous
/// multiples of its basis elements, at escalating degree levels (lowest
/// positive degree first) so positions whose annihilator has no usable
/// low-degree element are still filled. Candidates are random
/// small-coefficient combinations from the pools, accepted only after
/// passing is_sop and is_good_sop. Deterministic for a fixed seed.
struct GoodSopSearch {
  bool found = false;
  std::vector<Polynomial> sop;
  int tries = 0;
  std::string note;
};
GoodSopSearch find_good_sop(const QuotientModule& M, const Filtration& F,
                            std::uint64_t seed, int max_tries);

}  // namespace sgcm
