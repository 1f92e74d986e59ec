#include "sgcm/parameters.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace sgcm {

namespace {

/// All monomials of total degree k (k = 0 gives the constant monomial).
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, unsigned k) {
  std::vector<Monomial> out;
  const int n = ring->nvars();
  Monomial m(n);
  auto rec = [&](auto&& self, int v, unsigned left) -> void {
    if (v == n - 1) {
      m.set_exp(v, left);
      out.push_back(m);
      m.set_exp(v, 0);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set_exp(v, e);
      self(self, v + 1, left - e);
    }
    m.set_exp(v, 0);
  };
  if (n > 0) rec(rec, 0, k);
  return out;
}

void validate_parameters(const QuotientModule& M, const std::vector<Polynomial>& x) {
  for (const auto& f : x) {
    if (!same_ring(f.ring(), M.ring()))
      throw InputError("parameter element from a different ring");
    auto deg = f.degree();
    if (!deg || *deg == 0)
      throw InputError("parameter elements must have positive degree");
  }
}

std::vector<unsigned> all_ones(size_t s) { return std::vector<unsigned>(s, 1); }

/// ell(M/x(n)M) as a Length (no throw on infinity).
Length quotient_length_checked(const QuotientModule& M, const std::vector<Polynomial>& x,
                               const std::vector<unsigned>& n) {
  std::vector<Polynomial> powers = parameter_powers(x, n);
  Ideal xi(M.ring(), powers);
  Length total = Length::finite(0);
  for (const auto& I : M.components()) {
    total += ideal_sum(I, xi).quotient_length();
    if (!total.is_finite()) return total;
  }
  return total;
}

}  // namespace

std::vector<Polynomial> parameter_powers(const std::vector<Polynomial>& x,
                                         const std::vector<unsigned>& n) {
  if (!n.empty() && n.size() != x.size())
    throw InputError("exponent vector length does not match the parameter count");
  std::vector<Polynomial> out;
  out.reserve(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    unsigned e = n.empty() ? 1 : n[i];
    if (e == 0) throw InputError("parameter exponents must be positive");
    Polynomial p = x[i];
    for (unsigned k = 1; k < e; ++k) p = p * x[i];
    out.push_back(std::move(p));
  }
  return out;
}

std::uint64_t quotient_length(const QuotientModule& M, const std::vector<Polynomial>& x,
                              const std::vector<unsigned>& n) {
  validate_parameters(M, x);
  Length l = quotient_length_checked(M, x, n.empty() ? all_ones(x.size()) : n);
  if (!l.is_finite()) throw DomainError("not a system of parameters");
  return l.value();
}

bool is_sop(const QuotientModule& M, const std::vector<Polynomial>& x) {
  validate_parameters(M, x);
  int d = std::max(M.dim(), 0);
  if (static_cast<int>(x.size()) != d)
    throw InputError("a system of parameters of this module must have length " +
                     std::to_string(d));
  return quotient_length_checked(M, x, all_ones(x.size())).is_finite();
}

bool is_good_sop(const QuotientModule& M, const Filtration& F,
                 const std::vector<Polynomial>& x) {
  if (!check_dimension_condition(M, F))
    throw InputError("filtration does not satisfy the dimension condition");
  if (!is_sop(M, x)) return false;
  const int d = static_cast<int>(x.size());
  for (int i = 0; i < F.t(); ++i) {
    int lo = std::max(F.dim(i), 0);  // condition uses x_{d_i+1},...,x_d
    if (lo >= d) continue;
    std::vector<Polynomial> tail(x.begin() + lo, x.end());
    Ideal tail_ideal(M.ring(), tail);
    for (int k = 0; k < M.ncomponents(); ++k) {
      const Ideal& I = M.components()[static_cast<size_t>(k)];
      const Ideal& J = F.at(i).ideal(k);
      if (I.contains(J)) continue;  // zero in this component
      Ideal meet = ideal_intersection(J, ideal_sum(I, tail_ideal));
      for (const auto& g : meet.gens())
        if (!I.contains(g)) return false;
    }
  }
  return true;
}

namespace {

/// d-sequence test for elements y_1..y_s on the quotients R/C_k: for every
/// a <= b: (C_k + (y_1..y_{a-1})) : y_a y_b == same : y_b.
bool d_sequence_on(const std::vector<Ideal>& base, const std::vector<Polynomial>& y) {
  const int s = static_cast<int>(y.size());
  for (const auto& C : base) {
    for (int a = 1; a <= s; ++a) {
      std::vector<Polynomial> prefix(y.begin(), y.begin() + (a - 1));
      Ideal A = ideal_sum(C, Ideal(C.ring(), prefix));
      for (int b = a; b <= s; ++b) {
        Ideal lhs = ideal_colon(A, y[static_cast<size_t>(a - 1)] * y[static_cast<size_t>(b - 1)]);
        Ideal rhs = ideal_colon(A, y[static_cast<size_t>(b - 1)]);
        if (!ideal_equal(lhs, rhs)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_d_sequence(const QuotientModule& M, const std::vector<Polynomial>& x) {
  validate_parameters(M, x);
  return d_sequence_on(M.components(), x);
}

bool is_dd_sequence(const QuotientModule& M, const std::vector<Polynomial>& x,
                    unsigned bound) {
  validate_parameters(M, x);
  if (bound == 0) throw InputError("exponent bound must be positive");
  const int s = static_cast<int>(x.size());
  if (s == 0) return true;

  // Every constraint is determined by (i, a, b, n_1..n_{a-1}, n_a, n_b,
  // n_{i+1}..n_s); skip duplicates arising from the free middle exponents.
  std::set<std::vector<unsigned>> seen;
  std::vector<unsigned> n(static_cast<size_t>(s), 1);
  for (;;) {
    for (int i = 1; i <= s; ++i) {
      for (int a = 1; a <= i; ++a) {
        for (int b = a; b <= i; ++b) {
          std::vector<unsigned> sig{static_cast<unsigned>(i), static_cast<unsigned>(a),
                                    static_cast<unsigned>(b)};
          for (int c = 1; c < a; ++c) sig.push_back(n[static_cast<size_t>(c - 1)]);
          sig.push_back(n[static_cast<size_t>(a - 1)]);
          sig.push_back(n[static_cast<size_t>(b - 1)]);
          for (int c = i + 1; c <= s; ++c) sig.push_back(n[static_cast<size_t>(c - 1)]);
          if (!seen.insert(std::move(sig)).second) continue;

          for (const auto& I : M.components()) {
            // Base: I + suffix powers; the d-sequence pair (a, b) of prefix
            // powers is tested on R/base.
            std::vector<Polynomial> suffix;
            for (int c = i + 1; c <= s; ++c)
              suffix.push_back(parameter_powers({x[static_cast<size_t>(c - 1)]},
                                                {n[static_cast<size_t>(c - 1)]})[0]);
            std::vector<Polynomial> prefix;
            for (int c = 1; c < a; ++c)
              prefix.push_back(parameter_powers({x[static_cast<size_t>(c - 1)]},
                                                {n[static_cast<size_t>(c - 1)]})[0]);
            Ideal A = ideal_sum(I, Ideal(I.ring(), suffix));
            A = ideal_sum(A, Ideal(I.ring(), prefix));
            Polynomial xa = parameter_powers({x[static_cast<size_t>(a - 1)]},
                                             {n[static_cast<size_t>(a - 1)]})[0];
            Polynomial xb = parameter_powers({x[static_cast<size_t>(b - 1)]},
                                             {n[static_cast<size_t>(b - 1)]})[0];
            if (!ideal_equal(ideal_colon(A, xa * xb), ideal_colon(A, xb))) return false;
          }
        }
      }
    }
    // Advance the exponent tuple through {1..bound}^s.
    int pos = 0;
    while (pos < s && n[static_cast<size_t>(pos)] == bound) {
      n[static_cast<size_t>(pos)] = 1;
      ++pos;
    }
    if (pos == s) break;
    ++n[static_cast<size_t>(pos)];
  }
  return true;
}

namespace {

/// ell(N/x(n)N) where N is a submodule of M given componentwise by J_k:
/// sum_k ell(J_k / (x(n) J_k + I_k)).
Length submodule_power_quotient_length(const QuotientModule& M, const Submodule& N,
                                       const std::vector<Polynomial>& x,
                                       const std::vector<unsigned>& n) {
  std::vector<Polynomial> powers = parameter_powers(x, n);
  Ideal xi(M.ring(), powers);
  std::vector<Ideal> lower;
  lower.reserve(static_cast<size_t>(M.ncomponents()));
  for (int k = 0; k < M.ncomponents(); ++k) {
    const Ideal& I = M.components()[static_cast<size_t>(k)];
    const Ideal& J = N.ideal(k);
    lower.push_back(ideal_sum(ideal_product(xi, J), I));
  }
  return subquotient_length(M, Submodule(std::move(lower)), N);
}

}  // namespace

long long multiplicity(const QuotientModule& M, const Submodule& N,
                       const std::vector<Polynomial>& x_prefix) {
  N.validate(M);
  validate_parameters(M, x_prefix);
  const int s = static_cast<int>(x_prefix.size());
  const int dim_n = submodule_dimension(M, N);
  if (s != std::max(dim_n, 0))
    throw InputError("multiplicity needs exactly dim N parameters");
  if (s == 0) {
    Length l = subquotient_length(M, zero_submodule(M), N);
    if (!l.is_finite()) throw DomainError("not a system of parameters");
    return static_cast<long long>(l.value());
  }

  std::map<std::vector<unsigned>, long long> memo;
  auto length_at = [&](const std::vector<unsigned>& n) -> long long {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Length l = submodule_power_quotient_length(M, N, x_prefix, n);
    if (!l.is_finite()) throw DomainError("not a system of parameters");
    long long v = static_cast<long long>(l.value());
    memo.emplace(n, v);
    return v;
  };

  // Mixed finite difference of ell(N/x(n)N) over all s directions at the
  // given base point: sum over corners of the unit cube below it.
  auto mixed_difference = [&](unsigned base) -> long long {
    long long total = 0;
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      std::vector<unsigned> n(static_cast<size_t>(s), base);
      int bits = 0;
      for (int j = 0; j < s; ++j)
        if (mask & (1u << j)) {
          n[static_cast<size_t>(j)] = base - 1;
          ++bits;
        }
      total += (bits % 2 == 0 ? 1 : -1) * length_at(n);
    }
    return total;
  };

  long long e = mixed_difference(2);
  if (mixed_difference(3) != e)
    throw DomainError("multiplicity not stabilized, increase base point");
  return e;
}

MultiplicityTable multiplicity_table(const QuotientModule& M, const Filtration& F,
                                     const std::vector<Polynomial>& x) {
  if (!is_good_sop(M, F, x))
    throw DomainError("not a good system of parameters for this filtration");
  MultiplicityTable table;
  table.e.reserve(static_cast<size_t>(F.t()) + 1);
  for (int i = 0; i <= F.t(); ++i) {
    int di = F.dim(i);
    if (di <= 0) {
      Length l = subquotient_length(M, zero_submodule(M), F.at(i));
      table.e.push_back(static_cast<long long>(l.value()));
    } else {
      std::vector<Polynomial> prefix(x.begin(), x.begin() + di);
      table.e.push_back(multiplicity(M, F.at(i), prefix));
    }
  }
  return table;
}

long long ifm_value(const QuotientModule& M, const Filtration& F,
                    const std::vector<Polynomial>& x, const std::vector<unsigned>& n,
                    const MultiplicityTable& table) {
  if (n.size() != x.size()) throw InputError("exponent vector length does not match");
  long long value = static_cast<long long>(quotient_length(M, x, n));
  for (int i = 0; i <= F.t(); ++i) {
    int di = F.dim(i);
    long long factor = 1;
    for (int j = 0; j < di; ++j) factor *= static_cast<long long>(n[static_cast<size_t>(j)]);
    value -= factor * table.e[static_cast<size_t>(i)];
  }
  return value;
}

long long ifm_value(const QuotientModule& M, const Filtration& F,
                    const std::vector<Polynomial>& x, const std::vector<unsigned>& n) {
  return ifm_value(M, F, x, n, multiplicity_table(M, F, x));
}

GoodSopSearch find_good_sop(const QuotientModule& M, const Filtration& F,
                            std::uint64_t seed, int max_tries) {
  GoodSopSearch out;
  if (!check_dimension_condition(M, F))
    throw InputError("filtration does not satisfy the dimension condition");
  const int d = M.dim();
  if (d <= 0) {
    out.found = true;
    out.note = "module of dimension <= 0: the empty system of parameters";
    return out;
  }
  const RingPtr& ring = M.ring();

  // Candidate pools per position j, in escalating degree phases.  Every entry
  // after position dim(M_i) must annihilate M_i, so the pool for position j is
  // a homogeneous slice of Ann(M_i) for the largest member with dim M_i < j.
  // Phase 0 uses the lowest degree in which the annihilator has elements; two
  // higher slices follow, because the low-degree part can lie inside the
  // member's own ideal, where no choice separates the member from (x)M.
  std::vector<std::vector<std::vector<Polynomial>>> levels(static_cast<size_t>(d));
  for (int j = 1; j <= d; ++j) {
    int constraining = -1;
    for (int i = 0; i < F.t(); ++i)
      if (F.dim(i) < j) constraining = i;
    auto& lv = levels[static_cast<size_t>(j - 1)];
    Ideal ann = Ideal::full(ring);
    if (constraining >= 0) {
      for (int k = 0; k < M.ncomponents(); ++k) {
        const Ideal& I = M.components()[static_cast<size_t>(k)];
        const Ideal& J = F.at(constraining).ideal(k);
        if (I.contains(J)) continue;  // zero component: annihilator is everything
        ann = ideal_intersection(ann, ideal_colon(I, J));
      }
    }
    if (constraining < 0 || ann.is_full_ring()) {
      // Unconstrained position (or a zero member): linear forms suffice.
      std::vector<Polynomial> lin;
      for (int v = 0; v < ring->nvars(); ++v) lin.push_back(Polynomial::variable(ring, v));
      lv.push_back(std::move(lin));
      continue;
    }
    const auto& gb = ann.groebner().elems;
    unsigned dmin = 0;
    for (const auto& g : gb) {
      auto dg = g.degree();
      if (dg && *dg >= 1 && (dmin == 0 || *dg < dmin)) dmin = *dg;
    }
    if (dmin == 0) {
      out.note = "the annihilator of filtration member " + std::to_string(constraining) +
                 " has no nonconstant elements; position " + std::to_string(j) +
                 " cannot be filled";
      return out;
    }
    for (unsigned L = dmin; L <= dmin + 2; ++L) {
      std::vector<Polynomial> span;
      for (const auto& g : gb) {
        auto dg = g.degree();
        if (!dg || *dg < 1 || *dg > L) continue;
        for (const Monomial& m : monomials_of_degree(ring, L - *dg))
          span.push_back(g.times_term(m, 1));
      }
      if (!span.empty()) lv.push_back(std::move(span));
    }
  }

  size_t phases = 1;
  for (const auto& lv : levels) phases = std::max(phases, lv.size());
  const int per_phase = std::max(1, max_tries / static_cast<int>(phases));

  std::mt19937_64 eng(seed);
  auto draw_coeff = [&]() { return static_cast<long>(eng() % 4); };  // 0..3
  out.tries = 0;
  for (size_t p = 0; p < phases; ++p) {
    for (int t = 0; t < per_phase; ++t) {
      ++out.tries;
      std::vector<Polynomial> candidate;
      candidate.reserve(static_cast<size_t>(d));
      for (int j = 0; j < d; ++j) {
        const auto& lv = levels[static_cast<size_t>(j)];
        const auto& pool = lv[std::min(p, lv.size() - 1)];
        Polynomial sum = Polynomial::zero(ring);
        for (const auto& q : pool) {
          long c = draw_coeff();
          if (c != 0) sum = sum + q.scaled(mpq_class(c));
        }
        if (sum == Polynomial::zero(ring))
          sum = pool[eng() % pool.size()];  // never emit the zero element
        candidate.push_back(std::move(sum));
      }
      if (is_sop(M, candidate) && is_good_sop(M, F, candidate)) {
        out.found = true;
        out.sop = std::move(candidate);
        out.note = "verified good system of parameters";
        return out;
      }
    }
  }
  out.note = "no good system of parameters found within the given tries";
  return out;
}

}  // namespace sgcm
