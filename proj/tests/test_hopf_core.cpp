#include <algorithm>

#include "doctest.h"
#include "hgw/errors.hpp"
#include "hgw/zoo.hpp"

using namespace hgw;

namespace {

bool has_violation(const ValidationReport& r, const std::string& axiom, std::size_t witness) {
  for (const auto& v : r.violations)
    if (v.axiom.find(axiom) != std::string::npos &&
        std::find(v.witness.begin(), v.witness.end(), witness) != v.witness.end())
      return true;
  return false;
}

}  // namespace

TEST_CASE("zoo entries validate and match their stored facts") {
  for (const auto& e : zoo::hopf_zoo()) {
    CAPTURE(e.name);
    CHECK(validate_hopf(e.hopf).passed());
    CHECK(e.hopf.dim() == e.facts.dim);
    CHECK(zoo::is_commutative(e.hopf.algebra) == e.facts.commutative);
    CHECK(zoo::is_cocommutative(e.hopf.coalgebra) == e.facts.cocommutative);
    CHECK(antipode_order(e.hopf) == e.facts.antipode_order);
    CHECK(convolution_invert(Matrix::identity(e.hopf.field(), e.hopf.dim()), e.hopf.coalgebra, e.hopf.algebra) ==
          e.hopf.antipode);
    CHECK(dual(dual(e.hopf)) == e.hopf);
    CHECK(validate_hopf(dual(e.hopf)).passed());
    CHECK(validate_hopf(opposite(e.hopf)).passed());
    CHECK(opposite(opposite(e.hopf)) == e.hopf);
  }
}

TEST_CASE("antipode replaced by the identity fails at x") {
  auto h = zoo::sweedler(FieldSpec::prime(3));
  h.antipode = Matrix::identity(h.field(), 4);
  auto r = validate_hopf(h);
  CHECK_FALSE(r.passed());
  CHECK(has_violation(r, "antipode", 2));
}

TEST_CASE("broken associativity is reported") {
  // xg = gx instead of -gx: then (xg)g = -x but x(gg) = x
  auto h = zoo::sweedler(FieldSpec::prime(3));
  h.algebra.mul(3, 2 * 4 + 1) = h.field().one();
  CHECK_FALSE(validate_algebra(h.algebra).passed());
}

TEST_CASE("dual of kC2 over GF(3) is isomorphic to kC2") {
  auto f = FieldSpec::prime(3);
  auto h = zoo::group_algebra(f, zoo::cyclic_group(2));
  auto d = dual(h);
  // columns: images of 1 and g
  Matrix phi = Matrix::from_ints(f, {{1, 1}, {1, -1}});
  // phi is an algebra and coalgebra map kC2 -> dual
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      CHECK(phi.apply(h.algebra.basis_product(a, b)) == d.mul(phi.column(a), phi.column(b)));
  CHECK(kron(phi, phi) * h.coalgebra.comul == d.coalgebra.comul * phi);
  CHECK(d.coalgebra.counit * phi == h.coalgebra.counit);
  CHECK(d.antipode * phi == phi * h.antipode);
}

TEST_CASE("Sweedler algebra") {
  auto f = FieldSpec::prime(3);
  auto h = zoo::sweedler(f);
  CHECK(power(h.antipode, 2) != Matrix::identity(f, 4));
  CHECK(power(h.antipode, 4) == Matrix::identity(f, 4));
  CHECK(h.antipode.apply(h.basis(2)) == scale(-f.one(), h.basis(3)));
  CHECK(h.counit(h.basis(1)) == f.one());
  CHECK(h.counit(h.basis(2)) == f.zero());
  auto op = opposite(h);
  CHECK(op.antipode == power(h.antipode, 3));
  // S is the convolution inverse of id, so id is the inverse of S; in H^op
  // the inverse of id is S^{-1} = S^3.
  CHECK(convolution_invert(h.antipode, h.coalgebra, h.algebra) == Matrix::identity(f, 4));
  CHECK(convolution_invert(Matrix::identity(f, 4), op.coalgebra, op.algebra) == power(h.antipode, 3));
  auto u = convolution_unit(h.coalgebra, h.algebra);
  CHECK(convolution_invert(u, h.coalgebra, h.algebra) == u);
  CHECK_THROWS_AS(zoo::sweedler(FieldSpec::prime(2)), UnsupportedField);
  CHECK(validate_hopf(zoo::sweedler(FieldSpec::rationals())).passed());
}

TEST_CASE("zero map is not convolution invertible") {
  auto h = zoo::sweedler(FieldSpec::prime(3));
  CHECK_THROWS_AS(convolution_invert(Matrix(h.field(), 4, 4), h.coalgebra, h.algebra), NotConvolutionInvertible);
}

TEST_CASE("Taft algebras") {
  auto f3 = FieldSpec::prime(3);
  CHECK(zoo::taft(f3, 2, -f3.one()) == zoo::sweedler(f3));
  auto f13 = FieldSpec::prime(13);
  CHECK_THROWS_AS(zoo::taft(f13, 3, f13.from_int(4)), ValidationFailure);
  CHECK(zoo::taft(f13, 3, f13.from_int(3)).dim() == 9);
  auto f5 = FieldSpec::prime(5);
  CHECK_THROWS_AS(zoo::taft(f5, 4, f5.from_int(4)), ValidationFailure);
}

TEST_CASE("group checks") {
  CHECK_THROWS_AS(zoo::group_algebra(FieldSpec::prime(3), {{0, 1}, {1, 1}}), ValidationFailure);
  auto s3 = zoo::group_algebra(FieldSpec::prime(2), zoo::symmetric_group_s3());
  CHECK_FALSE(zoo::is_commutative(s3.algebra));
  CHECK_FALSE(zoo::is_cocommutative(dual(s3).coalgebra));
}
