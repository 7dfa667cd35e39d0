#include "doctest.h"
#include "hgw/errors.hpp"
#include "hgw/substructures.hpp"
#include "hgw/zoo.hpp"

using namespace hgw;

namespace {

const FieldSpec f3 = FieldSpec::prime(3);

Vector v4(long a, long b, long c, long d) { return {f3.from_int(a), f3.from_int(b), f3.from_int(c), f3.from_int(d)}; }
Subspace s4(const std::vector<Vector>& vs) { return Subspace::span(f3, 4, vs); }

// basis {1, g, x, gx}
const Vector one = v4(1, 0, 0, 0), g = v4(0, 1, 0, 0), x = v4(0, 0, 1, 0), gx = v4(0, 0, 0, 1);

}  // namespace

TEST_CASE("predicates on H4") {
  auto h = zoo::sweedler(f3);
  CHECK(is_generalized_ideal(h, Subspace::zero(f3, 4)));
  CHECK(is_generalized_ideal(h, augmentation_ideal(h)));
  CHECK_FALSE(is_generalized_ideal(h, s4({x})));
  CHECK(is_left_coideal_subalgebra(h, s4({one})));
  CHECK(is_left_coideal_subalgebra(h, Subspace::full(f3, 4)));
  CHECK(is_left_coideal_subalgebra(h, s4({one, g})));
  CHECK(is_left_coideal_subalgebra(h, s4({one, x})));
  CHECK_FALSE(is_left_coideal_subalgebra(h, s4({one, gx})));
  CHECK_FALSE(is_left_coideal_subalgebra(h, s4({g, x})));
}

TEST_CASE("refinement and lattice operations on H4") {
  auto h = zoo::sweedler(f3);
  auto aug = augmentation_ideal(h);
  CHECK(largest_generalized_ideal_inside(h, aug).space == aug);
  auto xs = s4({x, gx});
  CHECK(largest_generalized_ideal_inside(h, xs).space == xs);
  CHECK(largest_generalized_ideal_inside(h, s4({x})).space.is_zero());
  GeneralizedIdeal a{xs}, b{s4({sub(g, one), sub(gx, x)})};
  const GeneralizedIdeal ab[] = {a, b};
  CHECK(meet_generalized_ideals(h, ab).space.is_zero());
  CHECK(join_generalized_ideals(h, ab).space == aug);
  const GeneralizedIdeal aa[] = {a, a};
  CHECK(meet_generalized_ideals(h, aa) == a);
  CHECK(join_generalized_ideals(h, aa) == a);
  CHECK_THROWS_AS(meet_generalized_ideals(h, std::span<const GeneralizedIdeal>{}), DimensionMismatch);
}

TEST_CASE("closures") {
  auto h = zoo::sweedler(f3);
  CHECK(smallest_left_coideal_containing(h, s4({one})) == s4({one}));
  CHECK(smallest_left_coideal_containing(h, s4({x})) == s4({one, x}));
  CHECK(smallest_left_coideal_containing(h, Subspace::full(f3, 4)).is_full());
  CHECK(generated_left_coideal_subalgebra(h, Subspace::zero(f3, 4)).space == s4({one}));
  CHECK(generated_left_coideal_subalgebra(h, s4({g})).space == s4({one, g}));
  CHECK(generated_left_coideal_subalgebra(h, s4({x})).space == s4({one, x}));
  auto c2 = zoo::group_algebra(f3, zoo::cyclic_group(2));
  CHECK(generated_left_coideal_subalgebra(c2, Subspace::span(f3, 2, {{f3.zero(), f3.one()}})).space.is_full());
}

TEST_CASE("ideal from subalgebra and opposite ideal") {
  auto h = zoo::sweedler(f3);
  CHECK(ideal_from_subalgebra(h, s4({one})).space.is_zero());
  CHECK(ideal_from_subalgebra(h, Subspace::full(f3, 4)).space == augmentation_ideal(h));
  auto i = ideal_from_subalgebra(h, s4({one, g}));
  CHECK(i.space == s4({sub(g, one), sub(gx, x)}));
  // not a left ideal: x(g - 1) = -gx - x
  CHECK_FALSE(is_hopf_ideal(h, i.space));
  CHECK(is_hopf_ideal(h, augmentation_ideal(h)));
  CHECK(is_hopf_ideal(h, Subspace::zero(f3, 4)));
  CHECK(opposite_ideal(h, GeneralizedIdeal{Subspace::zero(f3, 4)}).space.is_zero());
  CHECK(opposite_ideal(h, GeneralizedIdeal{augmentation_ideal(h)}).space == augmentation_ideal(h));
  CHECK(opposite_ideal(h, GeneralizedIdeal{s4({x, gx})}).space == s4({x, gx}));
}

TEST_CASE("enumeration on kC2 over GF(3)") {
  auto h = zoo::group_algebra(f3, zoo::cyclic_group(2));
  auto ideals = enumerate_generalized_ideals(h);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].space.is_zero());
  CHECK(ideals[1].space == Subspace::span(f3, 2, {{-f3.one(), f3.one()}}));
  auto subs = enumerate_left_coideal_subalgebras(h);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].space == Subspace::span(f3, 2, {{f3.one(), f3.zero()}}));
  CHECK(subs[1].space.is_full());
  CHECK_THROWS_AS(enumerate_generalized_ideals(zoo::sweedler(FieldSpec::rationals())), UnsupportedField);
}

TEST_CASE("stored lattice sizes and the subgroup oracle") {
  for (const auto& e : zoo::hopf_zoo()) {
    if (e.facts.generalized_ideals < 0) continue;
    CAPTURE(e.name);
    CHECK(enumerate_generalized_ideals(e.hopf).size() == static_cast<std::size_t>(e.facts.generalized_ideals));
    CHECK(enumerate_left_coideal_subalgebras(e.hopf).size() == static_cast<std::size_t>(e.facts.coideal_subalgebras));
  }
  // left coideal subalgebras of kG are the kL for subgroups L: C4 has 3, S3 has 6
  CHECK(enumerate_left_coideal_subalgebras(zoo::group_algebra(FieldSpec::prime(5), zoo::cyclic_group(4))).size() == 3);
  CHECK(enumerate_left_coideal_subalgebras(zoo::group_algebra(FieldSpec::prime(2), zoo::symmetric_group_s3())).size() ==
        6);
}

TEST_CASE("lattice laws on enumerated ideals of H4") {
  auto h = zoo::sweedler(f3);
  auto ideals = enumerate_generalized_ideals(h);
  auto all = enumerate_subspaces(4, f3);
  for (const auto& w : all) {
    auto big = largest_generalized_ideal_inside(h, w);
    CHECK(w.contains(big.space));
    for (const auto& i : ideals)
      if (w.contains(i.space)) CHECK(big.space.contains(i.space));
  }
  for (const auto& a : ideals)
    for (const auto& b : ideals) {
      const GeneralizedIdeal ab[] = {a, b}, ba[] = {b, a};
      auto m = meet_generalized_ideals(h, ab);
      auto j = join_generalized_ideals(h, ab);
      CHECK(m == meet_generalized_ideals(h, ba));
      CHECK(j == join_generalized_ideals(h, ba));
      const GeneralizedIdeal a_j[] = {a, j}, a_m[] = {a, m};
      CHECK(meet_generalized_ideals(h, a_j) == a);
      CHECK(join_generalized_ideals(h, a_m) == a);
      // the meet commutes with I -> S(I)
      const GeneralizedIdeal ops[] = {opposite_ideal(h, a), opposite_ideal(h, b)};
      CHECK(meet_generalized_ideals(opposite(h), ops) == opposite_ideal(h, m));
    }
  auto subs = enumerate_left_coideal_subalgebras(h);
  for (const auto& k1 : subs)
    for (const auto& k2 : subs)
      if (k2.space.contains(k1.space))
        CHECK(ideal_from_subalgebra(h, k2.space).space.contains(ideal_from_subalgebra(h, k1.space).space));
}

TEST_CASE("annihilator duality for generalized ideals") {
  for (auto hopf : {zoo::group_algebra(f3, zoo::cyclic_group(2)), zoo::sweedler(f3)}) {
    auto d = dual(hopf);
    for (const auto& v : enumerate_subspaces(hopf.dim(), f3))
      CHECK(is_generalized_ideal(hopf, v) == is_right_coideal_subalgebra(d, annihilator(v)));
  }
}
