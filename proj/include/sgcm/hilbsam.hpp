#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sgcm/seqcm.hpp"

namespace sgcm {

/// Values and coefficients of the Hilbert-Samuel function of M with respect
/// to the parameter ideal q = (x_1, ..., x_d)R:
///
///   l(M/q^{n+1}M) = sum_{i=0}^{d} binomial(n+i, i) * e_{d-i}
///
/// for every n >= 0 when x is a dd-sequence. `values` stores l(M/q^{n+1}M)
/// for n = 0..d+3; the coefficients are solved exactly from n = 0..d and the
/// remaining three values certify the fit (`fit_exact`).
struct HilbertSamuelRecord {
  std::vector<Polynomial> q_generators;
  std::map<unsigned, std::uint64_t> values;
  std::vector<long long> coefficients;  // e_0 .. e_d
  bool fit_exact = false;
  std::string note;
};

/// l(M/q^{n+1}M) where q^{n+1} is generated by all degree-(n+1) products of
/// the parameters. Throws InputError unless x is a system of parameters and
/// DomainError if the length is infinite.
std::uint64_t hs_function(const QuotientModule& M, const std::vector<Polynomial>& x,
                          unsigned n);

/// Solve for e_0..e_d from the values at n = 0..d and certify the fit at
/// n = d+1..d+3. Throws InputError unless x is a system of parameters passing
/// the bound-2 dd-sequence criterion.
HilbertSamuelRecord hs_coefficients(const QuotientModule& M,
                                    const std::vector<Polynomial>& x);

/// One coefficient identity: the fitted e-coefficient on the left against the
/// multiplicity-plus-cohomology expression on the right. `available` is false
/// when a non-squarefree quotient blocks a cohomological term.
struct HsIdentity {
  std::string label;
  long long lhs = 0;
  long long rhs = 0;
  bool available = false;
  bool pass = false;
  std::string note;
};

/// Coefficient identities for a filtration F: M_0 c ... c M_t = M with a
/// good system of parameters x that is a dd-sequence:
///   - for each k = 1..t:
///       e_{d-d_k} = e(x_1..x_{d_k}; M_k)
///                   + sum_{j=1}^{d_k} binomial(d_k-1, j-1) l(H^j(M/M_k))
///   - for each k and each i strictly between d_k and d_{k+1}:
///       e_{d-i} = sum_{j=1}^{i} binomial(i-1, j-1) l(H^j(M/M_k))
///   - e_d = l(H^0(M))
struct VerifyHsReport {
  HilbertSamuelRecord record;
  std::vector<HsIdentity> identities;
  bool all_pass = false;
};

/// Check every coefficient identity for the filtration. Throws InputError if
/// F is provably not a generalized Cohen-Macaulay filtration or x is not a
/// good system of parameters passing the dd criterion.
VerifyHsReport verify_hs_theorem(const QuotientModule& M, const Filtration& F,
                                 const std::vector<Polynomial>& x);

/// The adjusted function
///   I_n(M) = l(M/q^{n+1}M) - sum_{k=1}^{t} binomial(n+d_k, d_k) e(x_1..x_{d_k}; D_k)
/// over the dimension filtration D, evaluated at n = 0..3 for two parameter
/// systems; its values do not depend on the choice of dd witness.
struct InInvarianceReport {
  std::vector<long long> values_first;
  std::vector<long long> values_second;
  bool equal = false;
};

/// Compute I_n(M) for n = 0..3 with both parameter systems and compare.
/// Throws InputError unless both are good systems of parameters for the
/// dimension filtration passing the dd criterion.
InInvarianceReport I_n_invariance(const QuotientModule& M,
                                  const std::vector<Polynomial>& x,
                                  const std::vector<Polynomial>& xprime);

}  // namespace sgcm
