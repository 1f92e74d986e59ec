#pragma once

#include <cstdint>
#include <vector>

#include "sgcm/ideal.hpp"

namespace sgcm {

/// A simplicial complex on the variable set of a ring, stored by facets as
/// bitmasks. The void complex (no faces at all, not even the empty face) and
/// the complex {empty face} are distinct: the former has no facets, the
/// latter has the single facet 0.
class SimplicialComplex {
 public:
  SimplicialComplex(int nvertices, std::vector<std::uint32_t> facets, bool is_void);

  static SimplicialComplex void_complex(int nvertices) {
    return SimplicialComplex(nvertices, {}, true);
  }
  static SimplicialComplex empty_face_only(int nvertices) {
    return SimplicialComplex(nvertices, {0}, false);
  }

  int nvertices() const { return n_; }
  bool is_void() const { return void_; }
  const std::vector<std::uint32_t>& facets() const { return facets_; }

  bool has_face(std::uint32_t face) const;
  /// Geometric dimension: max |facet| - 1; -1 for {empty}; undefined (throws)
  /// for the void complex.
  int dim() const;

  /// All faces (including the empty face), grouped by size: faces()[s] lists
  /// the faces with s vertices. Empty for the void complex.
  std::vector<std::vector<std::uint32_t>> faces_by_size() const;

 private:
  int n_;
  bool void_;
  std::vector<std::uint32_t> facets_;
};

/// The Stanley-Reisner complex of a squarefree monomial ideal: faces are the
/// variable subsets whose product avoids the ideal. The unit ideal gives the
/// void complex; the irrelevant ideal gives {empty face}.
SimplicialComplex stanley_reisner_complex(const Ideal& I);

/// link_Delta(sigma): faces tau disjoint from sigma with tau u sigma a face.
/// Throws DomainError when sigma is not a face.
SimplicialComplex link(const SimplicialComplex& Delta, std::uint32_t sigma);

/// Ranks of reduced simplicial homology over the field:
/// result[0] = rank of H~_{-1}, result[i+1] = rank of H~_i. All zero for the
/// void complex (returned as an empty vector).
std::vector<unsigned> reduced_homology_ranks(const SimplicialComplex& Delta, const Field& field);

/// Length of the j-th local cohomology of R/I at the irrelevant ideal, for a
/// squarefree monomial ideal I, decided by the combinatorial finiteness
/// criterion (links of nonempty faces) and computed as the rank of reduced
/// homology in degree j-1. Requires 0 <= j <= dim R/I.
Length local_cohomology_length(const Ideal& I, int j);

/// Whether R/I has finite local cohomology in all degrees below dim R/I,
/// and, when it does, the alternating-binomial bound
/// sum_j binom(d-1, j) * length(H^j) for j = 0..d-1.
struct GcmCheck {
  bool is_gcm = false;
  std::uint64_t invariant = 0;          // meaningful when is_gcm
  std::vector<Length> cohomology;       // lengths of H^0..H^{d-1}
};
GcmCheck is_gcm_cohomological(const Ideal& I);

}  // namespace sgcm
