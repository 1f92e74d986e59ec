#include "doctest.h"

#include <algorithm>

#include "sgcm/modules.hpp"
#include "test_util.hpp"

using namespace sgcm;
using namespace testutil;

namespace {

// The six-variable module R/(I n J) with I = (X1,X2,X3) n (X4,X5,X6) and
// J = (X2,X3,X4,X5); its dimension filtration has a two-dimensional middle
// member I/(I n J).
struct SixVarData {
  RingPtr r;
  Ideal I, J, IJ;
  QuotientModule M;
};

SixVarData six_var_module() {
  RingPtr r = ring_q({"X1", "X2", "X3", "X4", "X5", "X6"});
  std::vector<std::string> igens;
  for (std::string a : {"X1", "X2", "X3"})
    for (std::string b : {"X4", "X5", "X6"}) igens.push_back(a + "*" + b);
  Ideal I = ideal_of(r, igens);
  Ideal J = ideal_of(r, {"X2", "X3", "X4", "X5"});
  Ideal IJ = ideal_intersection(I, J);
  QuotientModule M(r, {IJ});
  return {r, I, J, IJ, M};
}

}  // namespace

TEST_CASE("quotient module basics: dimension and length") {
  RingPtr r = ring_q({"x", "y"});
  QuotientModule zero(r, {});
  CHECK(zero.is_zero_module());
  CHECK(zero.dim() == -1);
  CHECK(zero.length() == Length::finite(0));

  QuotientModule fin(r, {ideal_of(r, {"x^2", "y^3"})});
  CHECK(fin.dim() == 0);
  CHECK(fin.length() == Length::finite(6));

  QuotientModule sum(r, {ideal_of(r, {"x^2", "y^3"}), ideal_of(r, {"x"})});
  CHECK(sum.dim() == 1);
  CHECK_FALSE(sum.length().is_finite());

  CHECK_THROWS_AS(QuotientModule(r, {Ideal::full(r)}), InputError);
}

TEST_CASE("submodule validation and comparison") {
  RingPtr r = ring_q({"x", "y"});
  QuotientModule M(r, {ideal_of(r, {"x^2", "x*y"})});

  Submodule zero = zero_submodule(M);
  Submodule full = full_submodule(M);
  Submodule middle(std::vector<Ideal>{ideal_of(r, {"x"})});
  middle.validate(M);

  CHECK(submodule_leq(zero, middle));
  CHECK(submodule_leq(middle, full));
  CHECK_FALSE(submodule_leq(middle, zero));
  CHECK(submodule_equal(zero, zero_submodule(M)));
  CHECK_FALSE(submodule_equal(zero, middle));

  // (x)/(x^2,xy) is annihilated by (x,y): a zero-dimensional submodule.
  CHECK(submodule_dimension(M, middle) == 0);
  CHECK(submodule_dimension(M, zero) == -1);
  CHECK(submodule_dimension(M, full) == 1);

  Submodule bad(std::vector<Ideal>{ideal_of(r, {"y"})});
  CHECK_THROWS_AS(bad.validate(M), InputError);
  Submodule wrong_count{std::vector<Ideal>{ideal_of(r, {"x"}), ideal_of(r, {"x"})}};
  CHECK_THROWS_AS(wrong_count.validate(M), InputError);
}

TEST_CASE("filtration construction enforces ascent") {
  RingPtr r = ring_q({"x", "y", "z", "w"});
  QuotientModule M(r, {ideal_of(r, {"x*y", "x*z"})});
  Submodule mid(std::vector<Ideal>{ideal_of(r, {"x"})});

  Filtration F(M, {zero_submodule(M), mid, full_submodule(M)});
  CHECK(F.t() == 2);
  CHECK(F.dims() == std::vector<int>{-1, 2, 3});
  CHECK(check_dimension_condition(M, F));

  // Descending chain rejected outright.
  CHECK_THROWS_AS(Filtration(M, {mid, zero_submodule(M)}), InputError);

  // Ascending but not ending at M: dimension condition fails.
  Filtration partial(M, {zero_submodule(M), mid});
  CHECK_FALSE(check_dimension_condition(M, partial));

  // Repeated dimension fails the strict-increase requirement: the class of y
  // in (x,y)/(x*y,x*z) already has a three-dimensional annihilator quotient.
  Submodule mid2(std::vector<Ideal>{ideal_of(r, {"x", "y"})});
  Filtration rep(M, {zero_submodule(M), mid, mid2, full_submodule(M)});
  CHECK(submodule_dimension(M, mid2) == 3);
  CHECK_FALSE(check_dimension_condition(M, rep));
}

TEST_CASE("irreducible decomposition of monomial ideals") {
  RingPtr r3 = ring_q({"x", "y", "z"});
  auto dec = monomial_irreducible_decomposition(ideal_of(r3, {"x*y", "x*z"}));
  REQUIRE(dec.size() == 2);
  CHECK(ideal_equal(dec[0], ideal_of(r3, {"x"})));
  CHECK(ideal_equal(dec[1], ideal_of(r3, {"y", "z"})));

  RingPtr r4 = ring_q({"y", "z", "t", "w"});
  auto dec2 =
      monomial_irreducible_decomposition(ideal_of(r4, {"y*t", "y*w", "z*t", "z*w"}));
  REQUIRE(dec2.size() == 2);
  CHECK(ideal_equal(dec2[0], ideal_of(r4, {"t", "w"})));
  CHECK(ideal_equal(dec2[1], ideal_of(r4, {"y", "z"})));

  RingPtr r2 = ring_q({"x", "y"});
  auto dec3 = monomial_irreducible_decomposition(ideal_of(r2, {"x^2*y"}));
  REQUIRE(dec3.size() == 2);
  CHECK(ideal_equal(dec3[0], ideal_of(r2, {"y"})));
  CHECK(ideal_equal(dec3[1], ideal_of(r2, {"x^2"})));

  // Irreducible input comes back unchanged.
  auto dec4 = monomial_irreducible_decomposition(ideal_of(r2, {"x^2", "y"}));
  REQUIRE(dec4.size() == 1);
  CHECK(ideal_equal(dec4[0], ideal_of(r2, {"x^2", "y"})));

  // Components always intersect back to the input.
  RingPtr r6 = ring_q({"X1", "X2", "X3", "X4", "X5", "X6"});
  auto data = six_var_module();
  auto dec5 = monomial_irreducible_decomposition(data.IJ);
  REQUIRE(dec5.size() == 3);
  Ideal meet = dec5[0];
  for (size_t i = 1; i < dec5.size(); ++i) meet = ideal_intersection(meet, dec5[i]);
  CHECK(ideal_equal(meet, data.IJ));

  CHECK_THROWS_AS(monomial_irreducible_decomposition(ideal_of(r2, {"x+y"})), DomainError);
  CHECK_THROWS_AS(monomial_irreducible_decomposition(Ideal::zero(r2)), DomainError);
}

TEST_CASE("dimension filtration: one component, two strata") {
  RingPtr r = ring_q({"x", "y", "z", "w"});
  QuotientModule M(r, {ideal_of(r, {"x*y", "x*z"})});
  Filtration D = dimension_filtration(M);
  REQUIRE(D.t() == 2);
  CHECK(D.dims() == std::vector<int>{-1, 2, 3});
  CHECK(submodule_equal(D.at(0), zero_submodule(M)));
  CHECK(ideal_equal(D.at(1).ideal(0), ideal_of(r, {"x"})));
  CHECK(submodule_equal(D.at(2), full_submodule(M)));
}

TEST_CASE("dimension filtration: six-variable module") {
  auto data = six_var_module();
  Filtration D = dimension_filtration(data.M);
  REQUIRE(D.t() == 2);
  CHECK(D.dims() == std::vector<int>{-1, 2, 3});
  // Middle member is I/(I n J).
  CHECK(ideal_equal(D.at(1).ideal(0), data.I));
}

TEST_CASE("dimension filtration: finite-length bottom stratum") {
  RingPtr r = ring_q({"x", "y"});
  QuotientModule M(r, {ideal_of(r, {"x^2", "x*y"})});
  Filtration D = dimension_filtration(M);
  REQUIRE(D.t() == 1);
  CHECK(D.dims() == std::vector<int>{0, 1});
  CHECK(ideal_equal(D.at(0).ideal(0), ideal_of(r, {"x"})));
}

TEST_CASE("dimension filtration: direct sum with a one-dimensional summand") {
  RingPtr r = ring_q({"x", "y", "z", "t", "w"});
  Ideal I1 = ideal_of(r, {"y", "z", "t", "w"});
  Ideal I2 = ideal_of(r, {"y*t", "y*w", "z*t", "z*w"});
  QuotientModule M(r, {I1, I2});
  Filtration D = dimension_filtration(M);
  REQUIRE(D.t() == 2);
  CHECK(D.dims() == std::vector<int>{-1, 1, 3});
  // The middle member is the whole first summand and nothing of the second.
  CHECK(D.at(1).ideal(0).is_full_ring());
  CHECK(ideal_equal(D.at(1).ideal(1), I2));
}

TEST_CASE("dimension filtration accepts a supplied decomposition") {
  RingPtr r = ring_q({"x", "y", "z", "w"});
  Ideal I = ideal_of(r, {"x*y", "x*z"});
  QuotientModule M(r, {I});
  std::vector<std::optional<std::vector<Ideal>>> supplied(1);
  supplied[0] = std::vector<Ideal>{ideal_of(r, {"x"}), ideal_of(r, {"y", "z"})};
  Filtration D = dimension_filtration(M, supplied);
  CHECK(D.dims() == std::vector<int>{-1, 2, 3});

  // A decomposition that does not intersect to the ideal is rejected.
  supplied[0] = std::vector<Ideal>{ideal_of(r, {"x"})};
  CHECK_THROWS_AS(dimension_filtration(M, supplied), InputError);
}

TEST_CASE("subquotient lengths by Hilbert-function differences") {
  RingPtr r = ring_q({"x", "y"});
  QuotientModule M(r, {Ideal::zero(r)});
  Submodule lower(std::vector<Ideal>{ideal_of(r, {"x^2", "y"})});
  Submodule upper(std::vector<Ideal>{ideal_of(r, {"x", "y"})});
  CHECK(subquotient_length(M, lower, upper) == Length::finite(1));

  // Equal members give zero.
  CHECK(subquotient_length(M, upper, upper) == Length::finite(0));

  // (x)/(x^2) has infinite length: the quotient is one-dimensional.
  Submodule xsq(std::vector<Ideal>{ideal_of(r, {"x^2"})});
  Submodule x(std::vector<Ideal>{ideal_of(r, {"x"})});
  CHECK_FALSE(subquotient_length(M, xsq, x).is_finite());

  // Direct sums add componentwise.
  QuotientModule M2(r, {Ideal::zero(r), Ideal::zero(r)});
  Submodule lo2(std::vector<Ideal>{ideal_of(r, {"x^2", "y"}), ideal_of(r, {"x", "y^2"})});
  Submodule up2(std::vector<Ideal>{ideal_of(r, {"x", "y"}), ideal_of(r, {"x", "y"})});
  CHECK(subquotient_length(M2, lo2, up2) == Length::finite(2));

  // Reversed inclusion is rejected.
  CHECK_THROWS_AS(subquotient_length(M, x, xsq), DomainError);
}

TEST_CASE("largest finite-length submodule") {
  RingPtr r4 = ring_q({"x", "y", "z", "w"});
  QuotientModule saturated(r4, {ideal_of(r4, {"x*y", "x*z"})});
  CHECK(h0_length(saturated) == 0);

  RingPtr r2 = ring_q({"x", "y"});
  QuotientModule M(r2, {ideal_of(r2, {"x^2", "x*y"})});
  CHECK(h0_length(M) == 1);

  QuotientModule fin(r2, {ideal_of(r2, {"x", "y^2"})});
  CHECK(h0_length(fin) == 2);

  QuotientModule zero(r2, {});
  CHECK(h0_length(zero) == 0);
}

TEST_CASE("quotient by a submodule drops exhausted components") {
  RingPtr r = ring_q({"x", "y", "z", "t", "w"});
  Ideal I1 = ideal_of(r, {"y", "z", "t", "w"});
  Ideal I2 = ideal_of(r, {"y*t", "y*w", "z*t", "z*w"});
  QuotientModule M(r, {I1, I2});
  // Quotient by the first summand leaves only the second.
  Submodule N(std::vector<Ideal>{Ideal::full(r), I2});
  QuotientModule Q = quotient_module(M, N);
  REQUIRE(Q.ncomponents() == 1);
  CHECK(ideal_equal(Q.components()[0], I2));
  CHECK(Q.dim() == 3);

  // Quotient by zero is the module itself; quotient by M is zero.
  CHECK(quotient_module(M, zero_submodule(M)).ncomponents() == 2);
  CHECK(quotient_module(M, full_submodule(M)).is_zero_module());
}
