#include "sgcm/hilbsam.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <gmpxx.h>

namespace sgcm {

namespace {

/// All products x_1^{a_1} ... x_d^{a_d} with a_1 + ... + a_d = deg.
std::vector<Polynomial> power_products(const RingPtr& ring,
                                       const std::vector<Polynomial>& x,
                                       unsigned deg) {
  std::vector<Polynomial> out;
  const size_t d = x.size();
  if (d == 0) return out;
  std::vector<unsigned> alpha(d, 0);
  auto rec = [&](auto&& self, size_t pos, unsigned left) -> void {
    if (pos + 1 == d) {
      alpha[pos] = left;
      Polynomial p = Polynomial::constant(ring, 1);
      for (size_t i = 0; i < d; ++i)
        for (unsigned e = 0; e < alpha[i]; ++e) p = p * x[i];
      out.push_back(std::move(p));
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      alpha[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, deg);
  return out;
}

}  // namespace

std::uint64_t hs_function(const QuotientModule& M, const std::vector<Polynomial>& x,
                          unsigned n) {
  if (!is_sop(M, x)) throw InputError("not a system of parameters");
  const RingPtr& ring = M.ring();
  std::vector<Polynomial> prods = power_products(ring, x, n + 1);
  Ideal Q(ring, prods);
  Length total = Length::finite(0);
  for (const Ideal& I : M.components()) total += ideal_sum(I, Q).quotient_length();
  if (!total.is_finite()) throw DomainError("the quotient by the power ideal has infinite length");
  return total.value();
}

HilbertSamuelRecord hs_coefficients(const QuotientModule& M,
                                    const std::vector<Polynomial>& x) {
  if (!is_sop(M, x)) throw InputError("not a system of parameters");
  if (!is_dd_sequence(M, x))
    throw InputError("the parameters do not pass the dd-sequence criterion");

  const int d = std::max(M.dim(), 0);
  HilbertSamuelRecord rec;
  rec.q_generators = x;
  for (unsigned n = 0; n <= static_cast<unsigned>(d) + 3; ++n)
    rec.values[n] = hs_function(M, x, n);

  // Solve sum_{i=0}^{d} binomial(n+i, i) u_i = values[n] for n = 0..d, where
  // u_i = e_{d-i}, by exact rational elimination.
  const int m = d + 1;
  std::vector<std::vector<mpq_class>> A(static_cast<size_t>(m),
                                        std::vector<mpq_class>(static_cast<size_t>(m) + 1));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c)
      A[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          mpq_class(static_cast<long>(binomial(r + c, c)));
    A[static_cast<size_t>(r)][static_cast<size_t>(m)] =
        mpq_class(static_cast<unsigned long>(rec.values[static_cast<unsigned>(r)]));
  }
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r)
      if (A[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw DomainError("internal: singular Hilbert-Samuel system");
    std::swap(A[static_cast<size_t>(col)], A[static_cast<size_t>(piv)]);
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      mpq_class f = A[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                    A[static_cast<size_t>(col)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int c = col; c <= m; ++c)
        A[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            f * A[static_cast<size_t>(col)][static_cast<size_t>(c)];
    }
  }
  std::vector<long long> u(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    mpq_class val = A[static_cast<size_t>(i)][static_cast<size_t>(m)] /
                    A[static_cast<size_t>(i)][static_cast<size_t>(i)];
    val.canonicalize();
    if (val.get_den() != 1)
      throw DomainError("internal: non-integer Hilbert-Samuel coefficient");
    u[static_cast<size_t>(i)] = val.get_num().get_si();
  }
  rec.coefficients.assign(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i) rec.coefficients[static_cast<size_t>(d - i)] = u[static_cast<size_t>(i)];

  rec.fit_exact = true;
  rec.note = "fit verified at n = d+1..d+3";
  for (unsigned n = static_cast<unsigned>(d) + 1; n <= static_cast<unsigned>(d) + 3; ++n) {
    long long pred = 0;
    for (int i = 0; i < m; ++i)
      pred += binomial(static_cast<long long>(n) + i, i) * u[static_cast<size_t>(i)];
    if (pred < 0 || static_cast<std::uint64_t>(pred) != rec.values[n]) {
      rec.fit_exact = false;
      rec.note = "fit fails at n = " + std::to_string(n);
      break;
    }
  }
  return rec;
}

VerifyHsReport verify_hs_theorem(const QuotientModule& M, const Filtration& F,
                                 const std::vector<Polynomial>& x) {
  GcmFiltrationCheck check = check_gcm_filtration(M, F);
  if (check.verdict == Tristate::no)
    throw InputError("not a generalized Cohen-Macaulay filtration: " + check.detail);
  if (!is_good_sop(M, F, x))
    throw InputError("not a good system of parameters for the filtration");

  VerifyHsReport rep;
  rep.record = hs_coefficients(M, x);
  const int d = std::max(M.dim(), 0);
  const int t = F.t();

  auto coeff = [&](int idx) { return rep.record.coefficients[static_cast<size_t>(idx)]; };

  // sum_{j=1}^{jmax} binomial(w-1, j-1) l(H^j(M/M_k)); second value false when
  // a non-squarefree quotient ideal blocks a needed term.
  auto coh_sum = [&](int k, int w, int jmax) -> std::pair<long long, bool> {
    QuotientModule Mq = quotient_module(M, F.at(k));
    long long sum = 0;
    for (int j = 1; j <= jmax; ++j) {
      long long c = binomial(w - 1, j - 1);
      if (c == 0) continue;
      for (const Ideal& J : Mq.components()) {
        if (j > J.dim_quotient()) continue;
        if (!J.is_squarefree_monomial()) return {0, false};
        Length L = local_cohomology_length(J, j);
        if (!L.is_finite()) return {0, false};
        sum += c * static_cast<long long>(L.value());
      }
    }
    return {sum, true};
  };

  for (int k = 1; k <= t; ++k) {
    const int dk = F.dim(k);
    HsIdentity id;
    std::ostringstream lab;
    lab << "e_" << (d - dk) << " = e(x_1..x_" << dk << "; M_" << k << ") + corrections";
    id.label = lab.str();
    id.lhs = coeff(d - dk);
    auto [sum, ok] = coh_sum(k, dk, dk);
    if (!ok) {
      id.note = "unavailable (non-squarefree)";
      rep.identities.push_back(std::move(id));
      continue;
    }
    std::vector<Polynomial> prefix(x.begin(), x.begin() + dk);
    id.available = true;
    id.rhs = multiplicity(M, F.at(k), prefix) + sum;
    id.pass = (id.lhs == id.rhs);
    rep.identities.push_back(std::move(id));
  }

  for (int k = 0; k < t; ++k) {
    const int lo = (k == 0) ? std::max(F.dim(0), 0) : F.dim(k);
    for (int i = lo + 1; i < F.dim(k + 1); ++i) {
      HsIdentity id;
      std::ostringstream lab;
      lab << "e_" << (d - i) << " = cohomological corrections of M/M_" << k;
      id.label = lab.str();
      id.lhs = coeff(d - i);
      auto [sum, ok] = coh_sum(k, i, i);
      if (!ok) {
        id.note = "unavailable (non-squarefree)";
        rep.identities.push_back(std::move(id));
        continue;
      }
      id.available = true;
      id.rhs = sum;
      id.pass = (id.lhs == id.rhs);
      rep.identities.push_back(std::move(id));
    }
  }

  {
    HsIdentity id;
    id.label = "e_" + std::to_string(d) + " = l(H^0(M))";
    id.lhs = coeff(d);
    id.rhs = static_cast<long long>(h0_length(M));
    id.available = true;
    id.pass = (id.lhs == id.rhs);
    rep.identities.push_back(std::move(id));
  }

  rep.all_pass = rep.record.fit_exact;
  for (const auto& id : rep.identities)
    rep.all_pass = rep.all_pass && id.available && id.pass;
  return rep;
}

InInvarianceReport I_n_invariance(const QuotientModule& M,
                                  const std::vector<Polynomial>& x,
                                  const std::vector<Polynomial>& xprime) {
  Filtration D = dimension_filtration(M);

  auto values_for = [&](const std::vector<Polynomial>& s) {
    if (!is_sop(M, s)) throw InputError("not a system of parameters");
    if (M.dim() > 0) {
      if (!is_good_sop(M, D, s))
        throw InputError(
            "not a good system of parameters for the dimension filtration");
      if (!is_dd_sequence(M, s))
        throw InputError("the parameters do not pass the dd-sequence criterion");
    }
    MultiplicityTable table = multiplicity_table(M, D, s);
    std::vector<long long> vals;
    for (unsigned n = 0; n <= 3; ++n) {
      long long v = static_cast<long long>(hs_function(M, s, n));
      for (int k = 1; k <= D.t(); ++k)
        v -= binomial(static_cast<long long>(n) + D.dim(k), D.dim(k)) *
             table.e[static_cast<size_t>(k)];
      vals.push_back(v);
    }
    return vals;
  };

  InInvarianceReport rep;
  rep.values_first = values_for(x);
  rep.values_second = values_for(xprime);
  rep.equal = (rep.values_first == rep.values_second);
  return rep;
}

}  // namespace sgcm
