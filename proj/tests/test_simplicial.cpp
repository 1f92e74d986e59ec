#include "doctest.h"

#include "sgcm/simplicial.hpp"
#include "test_util.hpp"

using namespace sgcm;
using namespace testutil;

namespace {

std::uint32_t mask(std::initializer_list<int> vs) {
  std::uint32_t m = 0;
  for (int v : vs) m |= (1u << v);
  return m;
}

}  // namespace

TEST_CASE("vertex-set complexes from squarefree monomial ideals") {
  RingPtr r = ring_q({"x", "y", "z", "w"});
  SimplicialComplex D = stanley_reisner_complex(ideal_of(r, {"x*y", "x*z"}));
  CHECK_FALSE(D.is_void());
  CHECK(D.dim() == 2);
  REQUIRE(D.facets().size() == 2);
  CHECK(D.facets()[0] == mask({0, 3}));     // {x, w}
  CHECK(D.facets()[1] == mask({1, 2, 3}));  // {y, z, w}
  CHECK(D.has_face(mask({0})));
  CHECK(D.has_face(0));  // empty face
  CHECK_FALSE(D.has_face(mask({0, 1})));

  // Zero ideal: the full simplex.
  SimplicialComplex full = stanley_reisner_complex(Ideal::zero(r));
  REQUIRE(full.facets().size() == 1);
  CHECK(full.facets()[0] == mask({0, 1, 2, 3}));

  // Irrelevant ideal: only the empty face. Unit ideal: no faces at all.
  RingPtr r2 = ring_q({"x", "y"});
  SimplicialComplex pt = stanley_reisner_complex(ideal_of(r2, {"x", "y"}));
  CHECK_FALSE(pt.is_void());
  CHECK(pt.dim() == -1);
  SimplicialComplex none = stanley_reisner_complex(Ideal::full(r2));
  CHECK(none.is_void());
  CHECK_THROWS_AS(none.dim(), DomainError);

  CHECK_THROWS_AS(stanley_reisner_complex(ideal_of(r2, {"x^2"})), DomainError);
}

TEST_CASE("face enumeration by size") {
  RingPtr r = ring_q({"x", "y", "z", "w"});
  SimplicialComplex D = stanley_reisner_complex(ideal_of(r, {"x*y", "x*z"}));
  auto faces = D.faces_by_size();
  REQUIRE(faces.size() == 4);  // sizes 0..3
  CHECK(faces[0] == std::vector<std::uint32_t>{0});
  CHECK(faces[1].size() == 4);
  CHECK(faces[2].size() == 4);  // xw, yz, yw, zw
  CHECK(faces[3] == std::vector<std::uint32_t>{mask({1, 2, 3})});
  CHECK(SimplicialComplex::void_complex(3).faces_by_size().empty());
  auto only_empty = SimplicialComplex::empty_face_only(3).faces_by_size();
  REQUIRE(only_empty.size() == 1);
  CHECK(only_empty[0] == std::vector<std::uint32_t>{0});
}

TEST_CASE("links of faces") {
  // Two triangles glued at the vertex x.
  RingPtr r = ring_q({"x", "y", "z", "t", "w"});
  Ideal I = ideal_of(r, {"y*t", "y*w", "z*t", "z*w"});
  SimplicialComplex D = stanley_reisner_complex(I);
  REQUIRE(D.facets().size() == 2);  // {x,y,z}, {x,t,w}

  SimplicialComplex lk = link(D, mask({0}));
  REQUIRE(lk.facets().size() == 2);  // {y,z} and {t,w}: two disjoint edges
  CHECK(lk.facets()[0] == mask({1, 2}));
  CHECK(lk.facets()[1] == mask({3, 4}));

  // Link of the empty face is the complex itself.
  SimplicialComplex lk0 = link(D, 0);
  CHECK(lk0.facets() == D.facets());

  // Link of a facet is the empty-face complex.
  SimplicialComplex lkf = link(D, mask({0, 1, 2}));
  CHECK(lkf.dim() == -1);

  CHECK_THROWS_AS(link(D, mask({1, 3})), DomainError);  // {y,t} is a non-face
}

TEST_CASE("reduced homology of catalogued complexes") {
  Field Q = Field::rationals();

  // Single point: everything vanishes.
  SimplicialComplex point(1, {mask({0})}, false);
  CHECK(reduced_homology_ranks(point, Q) == std::vector<unsigned>{0, 0});

  // Two points: one zero-th homology class.
  SimplicialComplex two_points(2, {mask({0}), mask({1})}, false);
  CHECK(reduced_homology_ranks(two_points, Q) == std::vector<unsigned>{0, 1});

  // Hollow triangle: a circle.
  SimplicialComplex circle(3, {mask({0, 1}), mask({0, 2}), mask({1, 2})}, false);
  CHECK(reduced_homology_ranks(circle, Q) == std::vector<unsigned>{0, 0, 1});

  // Filled triangle: contractible.
  SimplicialComplex disk(3, {mask({0, 1, 2})}, false);
  CHECK(reduced_homology_ranks(disk, Q) == std::vector<unsigned>{0, 0, 0, 0});

  // Two disjoint filled triangles.
  SimplicialComplex two_disks(6, {mask({0, 1, 2}), mask({3, 4, 5})}, false);
  CHECK(reduced_homology_ranks(two_disks, Q) == std::vector<unsigned>{0, 1, 0, 0});

  // Only the empty face: homology in degree -1.
  CHECK(reduced_homology_ranks(SimplicialComplex::empty_face_only(2), Q) ==
        std::vector<unsigned>{1});

  // Void complex: no homology at all.
  CHECK(reduced_homology_ranks(SimplicialComplex::void_complex(2), Q).empty());

  // Hollow tetrahedron: a 2-sphere.
  SimplicialComplex sphere(
      4, {mask({0, 1, 2}), mask({0, 1, 3}), mask({0, 2, 3}), mask({1, 2, 3})}, false);
  CHECK(reduced_homology_ranks(sphere, Q) == std::vector<unsigned>{0, 0, 0, 1});
}

TEST_CASE("homology ranks depend on the field for torsion") {
  // Six-vertex triangulation of the real projective plane: 10 facets, every
  // pair of vertices an edge.
  std::vector<std::uint32_t> facets;
  for (auto t : std::vector<std::array<int, 3>>{{0, 1, 3},
                                                {0, 1, 5},
                                                {0, 2, 3},
                                                {0, 2, 4},
                                                {0, 4, 5},
                                                {1, 2, 4},
                                                {1, 2, 5},
                                                {1, 3, 4},
                                                {2, 3, 5},
                                                {3, 4, 5}})
    facets.push_back(mask({t[0], t[1], t[2]}));
  SimplicialComplex rp2(6, facets, false);

  CHECK(reduced_homology_ranks(rp2, Field::rationals()) ==
        std::vector<unsigned>{0, 0, 0, 0});
  CHECK(reduced_homology_ranks(rp2, Field::prime(2)) ==
        std::vector<unsigned>{0, 0, 1, 1});
  CHECK(reduced_homology_ranks(rp2, Field::prime(3)) ==
        std::vector<unsigned>{0, 0, 0, 0});
}

TEST_CASE("local cohomology lengths of squarefree quotients") {
  // R/(xy, xz) in three variables: a line and a plane through it. H^0
  // vanishes (the ideal is saturated) but H^1 has infinite length.
  RingPtr r3 = ring_q({"x", "y", "z"});
  Ideal I3 = ideal_of(r3, {"x*y", "x*z"});
  CHECK(local_cohomology_length(I3, 0) == Length::finite(0));
  CHECK_FALSE(local_cohomology_length(I3, 1).is_finite());

  // Two skew lines in four variables: H^1 is one-dimensional (the classic
  // non-Cohen-Macaulay but finite-deviation example).
  RingPtr r4 = ring_q({"x", "y", "z", "w"});
  Ideal skew = ideal_of(r4, {"x*z", "x*w", "y*z", "y*w"});
  CHECK(local_cohomology_length(skew, 0) == Length::finite(0));
  CHECK(local_cohomology_length(skew, 1) == Length::finite(1));

  // The hollow triangle is Cohen-Macaulay: H^0 = H^1 = 0.
  Ideal hollow = ideal_of(r3, {"x*y*z"});
  CHECK(local_cohomology_length(hollow, 0) == Length::finite(0));
  CHECK(local_cohomology_length(hollow, 1) == Length::finite(0));

  // Zero-dimensional quotient: H^0 has length 1.
  RingPtr r2 = ring_q({"x", "y"});
  CHECK(local_cohomology_length(ideal_of(r2, {"x", "y"}), 0) == Length::finite(1));

  // Unit ideal: the zero module.
  CHECK(local_cohomology_length(Ideal::full(r2), 0) == Length::finite(0));

  // Degree outside 0..dim is rejected.
  CHECK_THROWS_AS(local_cohomology_length(I3, 3), DomainError);
}

TEST_CASE("cohomological finite-deviation check") {
  // Two skew lines: all lengths finite, deviation binom(1,0)*0 + binom(1,1)*1.
  RingPtr r4 = ring_q({"x", "y", "z", "w"});
  auto skew = is_gcm_cohomological(ideal_of(r4, {"x*z", "x*w", "y*z", "y*w"}));
  CHECK(skew.is_gcm);
  CHECK(skew.invariant == 1);
  REQUIRE(skew.cohomology.size() == 2);
  CHECK(skew.cohomology[0] == Length::finite(0));
  CHECK(skew.cohomology[1] == Length::finite(1));

  // A line and a plane meeting at a point: H^1 infinite.
  RingPtr r3 = ring_q({"x", "y", "z"});
  auto mixed = is_gcm_cohomological(ideal_of(r3, {"x*y", "x*z"}));
  CHECK_FALSE(mixed.is_gcm);

  // Cohen-Macaulay: deviation zero.
  auto cm = is_gcm_cohomological(ideal_of(r3, {"x*y*z"}));
  CHECK(cm.is_gcm);
  CHECK(cm.invariant == 0);

  // Zero-dimensional and zero modules are trivially within bounds.
  RingPtr r2 = ring_q({"x", "y"});
  CHECK(is_gcm_cohomological(ideal_of(r2, {"x", "y"})).is_gcm);
  CHECK(is_gcm_cohomological(Ideal::full(r2)).is_gcm);

  // Two triangles sharing a vertex, with an extra line through it: the
  // second cohomology of the sum-of-planes part is infinite.
  RingPtr r5 = ring_q({"x", "y", "z", "t", "w"});
  auto glued = is_gcm_cohomological(ideal_of(r5, {"y*t", "y*w", "z*t", "z*w"}));
  CHECK_FALSE(glued.is_gcm);
}
