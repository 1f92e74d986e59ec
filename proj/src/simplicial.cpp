#include "sgcm/simplicial.hpp"

#include <algorithm>
#include <map>

#include "sgcm/length.hpp"

namespace sgcm {

namespace {

int popcount(std::uint32_t x) { return __builtin_popcount(x); }

}  // namespace

SimplicialComplex::SimplicialComplex(int nvertices, std::vector<std::uint32_t> facets,
                                     bool is_void)
    : n_(nvertices), void_(is_void), facets_(std::move(facets)) {
  if (void_ && !facets_.empty())
    throw DomainError("void complex cannot have facets");
  if (!void_ && facets_.empty())
    throw DomainError("non-void complex needs at least the empty face");
  // Keep only maximal faces, canonically ordered.
  std::vector<std::uint32_t> maximal;
  for (auto f : facets_) {
    bool dominated = false;
    for (auto g : facets_)
      if (f != g && (f & g) == f) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  facets_ = std::move(maximal);
}

bool SimplicialComplex::has_face(std::uint32_t face) const {
  for (auto f : facets_)
    if ((face & f) == face) return true;
  return false;
}

int SimplicialComplex::dim() const {
  if (void_) throw DomainError("dimension of the void complex");
  int d = -1;
  for (auto f : facets_) d = std::max(d, popcount(f) - 1);
  return d;
}

std::vector<std::vector<std::uint32_t>> SimplicialComplex::faces_by_size() const {
  std::vector<std::vector<std::uint32_t>> by_size;
  if (void_) return by_size;
  by_size.resize(static_cast<size_t>(dim()) + 2);
  std::vector<char> seen(1u << n_, 0);
  for (auto f : facets_) {
    // Enumerate all submasks of the facet, including 0.
    std::uint32_t sub = f;
    for (;;) {
      if (!seen[sub]) {
        seen[sub] = 1;
        by_size[static_cast<size_t>(popcount(sub))].push_back(sub);
      }
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  for (auto& level : by_size) std::sort(level.begin(), level.end());
  return by_size;
}

SimplicialComplex stanley_reisner_complex(const Ideal& I) {
  if (!I.is_squarefree_monomial())
    throw DomainError("Stanley-Reisner complex needs a squarefree monomial ideal");
  const int n = I.ring()->nvars();
  // Generator supports as bitmasks; the unit ideal (empty support present)
  // kills every subset and yields the void complex.
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.gens()) {
    std::uint32_t mask = 0;
    for (int v = 0; v < n; ++v)
      if (g.terms()[0].mono.exp(v)) mask |= (1u << v);
    supports.push_back(mask);
  }
  std::vector<std::uint32_t> faces;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (auto supp : supports)
      if ((supp & s) == supp) {
        ok = false;
        break;
      }
    if (ok) faces.push_back(s);
  }
  if (faces.empty()) return SimplicialComplex::void_complex(n);
  return SimplicialComplex(n, std::move(faces), false);
}

SimplicialComplex link(const SimplicialComplex& Delta, std::uint32_t sigma) {
  if (Delta.is_void() || !Delta.has_face(sigma))
    throw DomainError("link of a non-face");
  std::vector<std::uint32_t> facets;
  for (auto f : Delta.facets())
    if ((sigma & f) == sigma) facets.push_back(f & ~sigma);
  return SimplicialComplex(Delta.nvertices(), std::move(facets), false);
}

namespace {

/// Exact rank of an integer matrix over Q (fraction-free Bareiss) or over a
/// prime field (ordinary elimination mod p).
unsigned matrix_rank(std::vector<std::vector<mpz_class>> m, const Field& field) {
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  if (field.kind() == Field::Kind::prime) {
    mpz_class p(field.characteristic());
    for (auto& row : m)
      for (auto& x : row) {
        x %= p;
        if (x < 0) x += p;
      }
    unsigned rank = 0;
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
      size_t pivot = pr;
      while (pivot < rows && m[pivot][c] == 0) ++pivot;
      if (pivot == rows) continue;
      std::swap(m[pr], m[pivot]);
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), m[pr][c].get_mpz_t(), p.get_mpz_t());
      for (size_t r = 0; r < rows; ++r) {
        if (r == pr || m[r][c] == 0) continue;
        mpz_class factor = (m[r][c] * inv) % p;
        for (size_t cc = c; cc < cols; ++cc) {
          m[r][cc] = (m[r][cc] - factor * m[pr][cc]) % p;
          if (m[r][cc] < 0) m[r][cc] += p;
        }
      }
      ++pr;
      ++rank;
    }
    return rank;
  }
  // Bareiss: divisions are exact, entries stay integral.
  unsigned rank = 0;
  mpz_class prev(1);
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    size_t pivot = pr;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pr], m[pivot]);
    for (size_t r = pr + 1; r < rows; ++r) {
      for (size_t cc = c + 1; cc < cols; ++cc)
        m[r][cc] = (m[pr][c] * m[r][cc] - m[r][c] * m[pr][cc]) / prev;
      m[r][c] = 0;
    }
    prev = m[pr][c];
    ++pr;
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<unsigned> reduced_homology_ranks(const SimplicialComplex& Delta, const Field& field) {
  if (Delta.is_void()) return {};
  auto faces = Delta.faces_by_size();
  const int top = static_cast<int>(faces.size()) - 1;  // largest face size

  // Index of each face within its size level.
  std::map<std::uint32_t, size_t> index;
  for (const auto& level : faces)
    for (size_t i = 0; i < level.size(); ++i) index[level[i]] = i;

  // Boundary matrix from size-s faces to size-(s-1) faces; the s = 1 case is
  // the augmentation onto the empty face.
  auto boundary_rank = [&](int s) -> unsigned {
    if (s <= 0 || s > top) return 0;
    const auto& domain = faces[static_cast<size_t>(s)];
    const auto& codomain = faces[static_cast<size_t>(s) - 1];
    if (domain.empty() || codomain.empty()) return 0;
    std::vector<std::vector<mpz_class>> m(codomain.size(),
                                          std::vector<mpz_class>(domain.size(), mpz_class(0)));
    for (size_t j = 0; j < domain.size(); ++j) {
      std::uint32_t face = domain[j];
      int sign = 1;
      for (int v = 0; v < Delta.nvertices(); ++v) {
        if (!(face & (1u << v))) continue;
        std::uint32_t sub = face & ~(1u << v);
        m[index.at(sub)][j] = sign;
        sign = -sign;
      }
      if (s == 1) m[index.at(0)][j] = 1;  // augmentation
    }
    return matrix_rank(std::move(m), field);
  };

  // rank H~_i = dim C_{i+1} - rank d_{i+1} - rank d_{i+2} in face-size terms
  // (faces of size s live in homological degree s-1).
  std::vector<unsigned> ranks;
  ranks.reserve(static_cast<size_t>(top) + 1);
  std::vector<unsigned> bd(static_cast<size_t>(top) + 2, 0);
  for (int s = 1; s <= top; ++s) bd[static_cast<size_t>(s)] = boundary_rank(s);
  for (int s = 0; s <= top; ++s) {
    std::uint64_t dim_c = faces[static_cast<size_t>(s)].size();
    unsigned r = static_cast<unsigned>(dim_c - bd[static_cast<size_t>(s)] -
                                       bd[static_cast<size_t>(s) + 1]);
    ranks.push_back(r);
  }
  return ranks;
}

namespace {

unsigned rank_at(const std::vector<unsigned>& ranks, int homological_degree) {
  // ranks[s] is H~ in degree s-1.
  int s = homological_degree + 1;
  if (s < 0 || s >= static_cast<int>(ranks.size())) return 0;
  return ranks[static_cast<size_t>(s)];
}

}  // namespace

Length local_cohomology_length(const Ideal& I, int j) {
  SimplicialComplex Delta = stanley_reisner_complex(I);
  const Field& field = I.ring()->field();
  if (Delta.is_void()) return Length::finite(0);  // zero module
  int d = Delta.dim() + 1;  // Krull dimension of R/I
  if (j < 0 || j > d) throw DomainError("local cohomology degree out of range");

  // Finiteness: every nonempty face must have vanishing reduced homology of
  // its link in degree j - |face| - 1.
  auto faces = Delta.faces_by_size();
  std::map<std::uint32_t, std::vector<unsigned>> memo;
  for (size_t s = 1; s < faces.size(); ++s) {
    for (auto sigma : faces[s]) {
      auto it = memo.find(sigma);
      if (it == memo.end())
        it = memo.emplace(sigma, reduced_homology_ranks(link(Delta, sigma), field)).first;
      if (rank_at(it->second, j - static_cast<int>(s) - 1) != 0) return Length::infinite();
    }
  }
  return Length::finite(rank_at(reduced_homology_ranks(Delta, field), j - 1));
}

GcmCheck is_gcm_cohomological(const Ideal& I) {
  GcmCheck out;
  int d = I.dim_quotient();
  if (d <= 0) {
    out.is_gcm = true;
    out.invariant = 0;
    return out;
  }
  out.is_gcm = true;
  for (int j = 0; j < d; ++j) {
    Length l = local_cohomology_length(I, j);
    out.cohomology.push_back(l);
    if (!l.is_finite()) {
      out.is_gcm = false;
      continue;
    }
    out.invariant +=
        static_cast<std::uint64_t>(binomial(d - 1, j)) * l.value();
  }
  if (!out.is_gcm) out.invariant = 0;
  return out;
}

}  // namespace sgcm
