#include "sgcm/modules.hpp"

#include <algorithm>
#include <map>

namespace sgcm {

QuotientModule::QuotientModule(RingPtr ring, std::vector<Ideal> components)
    : ring_(std::move(ring)), comps_(std::move(components)) {
  for (const auto& I : comps_) {
    if (!same_ring(I.ring(), ring_)) throw InputError("module component from a different ring");
    if (I.is_full_ring()) throw InputError("module component ideal must be proper");
  }
}

int QuotientModule::dim() const {
  int d = -1;
  for (const auto& I : comps_) d = std::max(d, I.dim_quotient());
  return d;
}

Length QuotientModule::length() const {
  Length total;
  for (const auto& I : comps_) total += I.quotient_length();
  return total;
}

void Submodule::validate(const QuotientModule& M) const {
  if (static_cast<int>(ideals_.size()) != M.ncomponents())
    throw InputError("submodule has wrong number of components");
  for (int k = 0; k < M.ncomponents(); ++k)
    if (!ideals_[static_cast<size_t>(k)].contains(M.components()[static_cast<size_t>(k)]))
      throw InputError("submodule ideal does not contain the module's component ideal");
}

Submodule zero_submodule(const QuotientModule& M) { return Submodule(M.components()); }

Submodule full_submodule(const QuotientModule& M) {
  std::vector<Ideal> ideals;
  for (int k = 0; k < M.ncomponents(); ++k) ideals.push_back(Ideal::full(M.ring()));
  return Submodule(std::move(ideals));
}

bool submodule_leq(const Submodule& inner, const Submodule& outer) {
  if (inner.ideals().size() != outer.ideals().size())
    throw DomainError("submodule comparison across different modules");
  for (size_t k = 0; k < inner.ideals().size(); ++k)
    if (!outer.ideals()[k].contains(inner.ideals()[k])) return false;
  return true;
}

bool submodule_equal(const Submodule& a, const Submodule& b) {
  return submodule_leq(a, b) && submodule_leq(b, a);
}

int submodule_dimension(const QuotientModule& M, const Submodule& N) {
  N.validate(M);
  int d = -1;
  for (int k = 0; k < M.ncomponents(); ++k) {
    const Ideal& I = M.components()[static_cast<size_t>(k)];
    const Ideal& J = N.ideal(k);
    if (I.contains(J)) continue;  // zero component contributes dim -1
    d = std::max(d, ideal_colon(I, J).dim_quotient());
  }
  return d;
}

Filtration::Filtration(const QuotientModule& M, std::vector<Submodule> chain)
    : chain_(std::move(chain)) {
  if (chain_.empty()) throw InputError("filtration must have at least one member");
  for (size_t i = 0; i < chain_.size(); ++i) {
    chain_[i].validate(M);
    if (i && !submodule_leq(chain_[i - 1], chain_[i]))
      throw InputError("filtration is not ascending at step " + std::to_string(i));
  }
  dims_.reserve(chain_.size());
  for (const auto& N : chain_) dims_.push_back(submodule_dimension(M, N));
}

bool check_dimension_condition(const QuotientModule& M, const Filtration& F) {
  for (size_t i = 1; i < F.chain().size(); ++i)
    if (F.dims()[i - 1] >= F.dims()[i]) return false;
  for (const auto& J : F.chain().back().ideals())
    if (!J.is_full_ring()) return false;
  return F.dim(F.t()) == M.dim();
}

// ---------------------------------------------------------------------------
// Irreducible decomposition of monomial ideals.

namespace {

std::vector<Monomial> monomial_gens(const Ideal& I) {
  std::vector<Monomial> ms;
  for (const auto& g : I.gens()) {
    if (!g.is_monomial()) throw DomainError("expected a monomial ideal");
    ms.push_back(g.terms()[0].mono);
  }
  return ms;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> keep;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < gens.size() && !dominated; ++j)
      if (i != j && gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i)) dominated = true;
    if (!dominated) keep.push_back(gens[i]);
  }
  gens = std::move(keep);
}

/// B <= A for monomial ideals given by generators.
bool mono_contains(const std::vector<Monomial>& A, const std::vector<Monomial>& B) {
  for (const auto& b : B) {
    bool in = false;
    for (const auto& a : A)
      if (a.divides(b)) {
        in = true;
        break;
      }
    if (!in) return false;
  }
  return true;
}

std::vector<Monomial> mono_intersect(const std::vector<Monomial>& A,
                                     const std::vector<Monomial>& B) {
  std::vector<Monomial> out;
  out.reserve(A.size() * B.size());
  for (const auto& a : A)
    for (const auto& b : B) out.push_back(Monomial::lcm(a, b));
  minimalize(out);
  return out;
}

void split_recursive(std::vector<Monomial> gens, std::vector<std::vector<Monomial>>& out) {
  minimalize(gens);
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    const Monomial& g = gens[gi];
    int first_var = -1, support = 0;
    for (int v = 0; v < g.nvars(); ++v)
      if (g.exp(v) > 0) {
        if (first_var < 0) first_var = v;
        ++support;
      }
    if (support >= 2) {
      Monomial power = Monomial::var(g.nvars(), first_var, g.exp(first_var));
      Monomial rest = g / power;
      std::vector<Monomial> left = gens, right = gens;
      left[gi] = power;
      right[gi] = rest;
      split_recursive(std::move(left), out);
      split_recursive(std::move(right), out);
      return;
    }
  }
  out.push_back(std::move(gens));  // every generator is a pure variable power
}

}  // namespace

std::vector<Ideal> monomial_irreducible_decomposition(const Ideal& I) {
  if (!I.is_monomial()) throw DomainError("irreducible decomposition needs a monomial ideal");
  if (I.is_zero_ideal())
    throw DomainError("irreducible decomposition of the zero ideal is not defined");
  if (I.is_full_ring()) throw DomainError("irreducible decomposition of the full ring");
  const RingPtr& ring = I.ring();

  std::vector<std::vector<Monomial>> pieces;
  split_recursive(monomial_gens(I), pieces);

  for (auto& p : pieces) std::sort(p.begin(), p.end());
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  });
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());

  // Drop any component containing the intersection of the others, one at a
  // time (first hit per pass) for determinism.
  bool changed = true;
  while (changed && pieces.size() > 1) {
    changed = false;
    for (size_t i = 0; i < pieces.size(); ++i) {
      std::vector<Monomial> rest;
      bool first = true;
      for (size_t j = 0; j < pieces.size(); ++j) {
        if (j == i) continue;
        rest = first ? pieces[j] : mono_intersect(rest, pieces[j]);
        first = false;
      }
      if (mono_contains(pieces[i], rest)) {
        pieces.erase(pieces.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }

  std::vector<Ideal> result;
  result.reserve(pieces.size());
  for (const auto& p : pieces) {
    std::vector<Polynomial> gens;
    gens.reserve(p.size());
    for (const auto& m : p) gens.push_back(Polynomial::monomial(ring, m));
    result.emplace_back(ring, std::move(gens));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Dimension filtration.

Filtration dimension_filtration(
    const QuotientModule& M, const std::vector<std::optional<std::vector<Ideal>>>& supplied) {
  if (!supplied.empty() && static_cast<int>(supplied.size()) != M.ncomponents())
    throw InputError("one decomposition per module component expected");

  // Pieces of each component ideal, with their quotient dimensions.
  std::vector<std::vector<Ideal>> pieces(static_cast<size_t>(M.ncomponents()));
  std::vector<std::vector<int>> piece_dims(static_cast<size_t>(M.ncomponents()));
  for (int k = 0; k < M.ncomponents(); ++k) {
    const Ideal& I = M.components()[static_cast<size_t>(k)];
    if (!supplied.empty() && supplied[static_cast<size_t>(k)]) {
      pieces[static_cast<size_t>(k)] = *supplied[static_cast<size_t>(k)];
      if (pieces[static_cast<size_t>(k)].empty())
        throw InputError("supplied decomposition is empty");
      Ideal meet = pieces[static_cast<size_t>(k)][0];
      for (size_t j = 1; j < pieces[static_cast<size_t>(k)].size(); ++j)
        meet = ideal_intersection(meet, pieces[static_cast<size_t>(k)][j]);
      if (!ideal_equal(meet, I))
        throw InputError("supplied decomposition does not intersect to the component ideal");
    } else if (I.is_zero_ideal()) {
      // R itself is the only piece: the component is already prime.
      pieces[static_cast<size_t>(k)] = {I};
    } else if (I.is_monomial()) {
      pieces[static_cast<size_t>(k)] = monomial_irreducible_decomposition(I);
    } else {
      throw DomainError(
          "dimension filtration needs monomial component ideals or supplied decompositions");
    }
    for (const auto& Q : pieces[static_cast<size_t>(k)])
      piece_dims[static_cast<size_t>(k)].push_back(Q.dim_quotient());
  }

  // Global list of positive piece dimensions; the top one is dim M.
  std::vector<int> s;
  for (const auto& dims : piece_dims)
    for (int d : dims)
      if (d >= 1) s.push_back(d);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  // The largest submodule of dimension <= threshold has component ideals
  // equal to the intersection of the pieces of dimension > threshold.
  auto level = [&](int threshold) {
    std::vector<Ideal> ideals;
    for (int k = 0; k < M.ncomponents(); ++k) {
      Ideal acc = Ideal::full(M.ring());
      bool any = false;
      for (size_t j = 0; j < pieces[static_cast<size_t>(k)].size(); ++j) {
        if (piece_dims[static_cast<size_t>(k)][j] > threshold) {
          acc = any ? ideal_intersection(acc, pieces[static_cast<size_t>(k)][j])
                    : pieces[static_cast<size_t>(k)][j];
          any = true;
        }
      }
      ideals.push_back(acc);
    }
    return Submodule(std::move(ideals));
  };

  // Chain entry i (for i < r) is the largest submodule of dimension < s[i];
  // its own dimension is s[i-1] (or <= 0 at the bottom). The final entry is
  // M itself, of dimension s[r-1] (or <= 0 when s is empty).
  std::vector<Submodule> chain;
  const int r = static_cast<int>(s.size());
  for (int i = 0; i < r; ++i) chain.push_back(level(s[static_cast<size_t>(i)] - 1));
  chain.push_back(full_submodule(M));

  Filtration F(M, std::move(chain));
  if (!check_dimension_condition(M, F))
    throw DomainError("internal: dimension filtration violates the dimension condition");
  return F;
}

// ---------------------------------------------------------------------------
// Lengths.

Length subquotient_length(const QuotientModule& M, const Submodule& lower,
                          const Submodule& upper) {
  lower.validate(M);
  upper.validate(M);
  if (!submodule_leq(lower, upper))
    throw DomainError("subquotient_length: lower is not contained in upper");
  Length total = Length::finite(0);
  for (int k = 0; k < M.ncomponents(); ++k) {
    const Ideal& J = lower.ideal(k);
    const Ideal& Jp = upper.ideal(k);
    if (!J.is_homogeneous() || !Jp.is_homogeneous())
      throw DomainError("subquotient_length requires graded (homogeneous) ideals");
    if (Jp.is_zero_ideal()) continue;  // upper = lower = 0 in this component
    if (J.contains(Jp)) continue;      // zero subquotient
    Ideal ann = ideal_colon(J, Jp);
    if (ann.dim_quotient() > 0) return Length::infinite();
    unsigned N = *ann.power_of_irrelevant();
    unsigned maxdeg = 0;
    for (const auto& g : Jp.gens()) maxdeg = std::max(maxdeg, *g.degree());
    unsigned D = N + maxdeg;
    auto lo = J.hilbert_values(D);
    auto hi = Jp.hilbert_values(D);
    std::uint64_t sum = 0;
    for (unsigned d = 0; d <= D; ++d) sum += lo[d] - hi[d];
    total += Length::finite(sum);
  }
  return total;
}

std::uint64_t h0_length(const QuotientModule& M) {
  Ideal m = Ideal::irrelevant(M.ring());
  std::vector<Ideal> sat;
  sat.reserve(static_cast<size_t>(M.ncomponents()));
  for (const auto& I : M.components()) sat.push_back(saturation(I, m));
  Length l = subquotient_length(M, zero_submodule(M), Submodule(std::move(sat)));
  return l.value();  // saturation quotients are finite by construction
}

QuotientModule quotient_module(const QuotientModule& M, const Submodule& N) {
  N.validate(M);
  std::vector<Ideal> comps;
  for (const auto& J : N.ideals())
    if (!J.is_full_ring()) comps.push_back(J);
  return QuotientModule(M.ring(), std::move(comps));
}

}  // namespace sgcm
