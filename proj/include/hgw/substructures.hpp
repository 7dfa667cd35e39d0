#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hgw/hopf.hpp"
#include "hgw/subspace.hpp"

namespace hgw {

// Right ideal coideal I of H: eps(I) = 0, Delta(I) in I(x)H + H(x)I, IH in I.
struct GeneralizedIdeal {
  Subspace space;
  friend bool operator==(const GeneralizedIdeal&, const GeneralizedIdeal&) = default;
};

// Unital subalgebra K with Delta(K) in H(x)K.
struct LeftCoidealSubalgebra {
  Subspace space;
  friend bool operator==(const LeftCoidealSubalgebra&, const LeftCoidealSubalgebra&) = default;
};

// Q = H/I with the induced coalgebra and right H-module structure.
struct GeneralizedQuotient {
  GeneralizedIdeal ideal;
  QuotientSpace quotient;
  Matrix comul;         // dim Q -> dim Q^2
  Matrix counit;        // dim Q -> 1
  Matrix right_action;  // Q (x) H -> Q, column q * dim H + h

  std::size_t dim() const { return quotient.dim(); }
  const Matrix& projection() const { return quotient.projection; }
  friend bool operator==(const GeneralizedQuotient& a, const GeneralizedQuotient& b) { return a.ideal == b.ideal; }
};

Subspace augmentation_ideal(const HopfAlgebraStructure& h);
// X^+ = X cap ker eps.
Subspace plus_part(const HopfAlgebraStructure& h, const Subspace& x);

bool is_right_ideal(const HopfAlgebraStructure& h, const Subspace& v);
bool is_left_ideal(const HopfAlgebraStructure& h, const Subspace& v);
bool is_coideal(const HopfAlgebraStructure& h, const Subspace& v);
bool is_left_coideal(const HopfAlgebraStructure& h, const Subspace& v);
bool is_right_coideal(const HopfAlgebraStructure& h, const Subspace& v);
bool is_unital_subalgebra(const AlgebraStructure& a, const Subspace& v);

bool is_generalized_ideal(const HopfAlgebraStructure& h, const Subspace& v);
bool is_left_coideal_subalgebra(const HopfAlgebraStructure& h, const Subspace& v);
// Unital subalgebra with Delta(v) in v (x) H.
bool is_right_coideal_subalgebra(const HopfAlgebraStructure& h, const Subspace& v);
// Two-sided ideal, coideal and S-stable.
bool is_hopf_ideal(const HopfAlgebraStructure& h, const Subspace& v);

// Throw ValidationFailure unless the predicate holds.
GeneralizedIdeal make_generalized_ideal(const HopfAlgebraStructure& h, const Subspace& v);
LeftCoidealSubalgebra make_left_coideal_subalgebra(const HopfAlgebraStructure& h, const Subspace& v);

GeneralizedQuotient generalized_quotient(const HopfAlgebraStructure& h, const GeneralizedIdeal& i);
// Q = H (I = 0) and Q = k (I = ker eps).
GeneralizedQuotient identity_quotient(const HopfAlgebraStructure& h);
GeneralizedQuotient trivial_quotient(const HopfAlgebraStructure& h);

GeneralizedIdeal largest_generalized_ideal_inside(const HopfAlgebraStructure& h, const Subspace& w);
GeneralizedIdeal meet_generalized_ideals(const HopfAlgebraStructure& h, std::span<const GeneralizedIdeal> ideals);
GeneralizedIdeal join_generalized_ideals(const HopfAlgebraStructure& h, std::span<const GeneralizedIdeal> ideals);

// Right tensor legs: span of the w_a in x = sum_a e_a (x) w_a, for x in y (x in V (x) W, dim V = m).
Subspace right_legs(const Subspace& y, std::size_t m);
Subspace left_legs(const Subspace& y, std::size_t m);

Subspace smallest_left_coideal_containing(const HopfAlgebraStructure& h, const Subspace& y);
// Smallest unital subalgebra of a containing y.
Subspace generated_subalgebra(const AlgebraStructure& a, const Subspace& y);
LeftCoidealSubalgebra generated_left_coideal_subalgebra(const HopfAlgebraStructure& h, const Subspace& y);

// K^+ H.
GeneralizedIdeal ideal_from_subalgebra(const HopfAlgebraStructure& h, const Subspace& k);
// S_H(I), a generalized ideal of opposite(h). Throws NotInvertible.
GeneralizedIdeal opposite_ideal(const HopfAlgebraStructure& h, const GeneralizedIdeal& i);

// Exhaustive filters of enumerate_subspaces, in canonical order.
std::vector<GeneralizedIdeal> enumerate_generalized_ideals(const HopfAlgebraStructure& h,
                                                           std::uint64_t cap = kDefaultEnumerationCap);
std::vector<LeftCoidealSubalgebra> enumerate_left_coideal_subalgebras(const HopfAlgebraStructure& h,
                                                                      std::uint64_t cap = kDefaultEnumerationCap);
// Left coideals of H containing 1.
std::vector<Subspace> enumerate_unital_left_coideals(const HopfAlgebraStructure& h,
                                                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace hgw
