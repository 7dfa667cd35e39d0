#pragma once

#include <string>
#include <vector>

#include "hgw/hopf.hpp"
#include "hgw/substructures.hpp"

namespace hgw {

// Right H-comodule algebra A with coaction delta : A -> A (x) H.
struct ComoduleAlgebra {
  AlgebraStructure algebra;
  HopfAlgebraStructure hopf;
  Matrix coaction;  // m*n x m, column a holds delta(e_a)
  std::vector<std::string> basis_names;

  std::size_t dim() const { return algebra.dim; }
  const FieldSpec& field() const { return algebra.field; }
  Vector coact(std::span<const Scalar> a) const { return coaction.apply(a); }
};

// H over itself with delta = Delta.
ComoduleAlgebra regular_comodule_algebra(const HopfAlgebraStructure& h);

ValidationReport validate_comodule_algebra(const ComoduleAlgebra& a);

// delta_Q = (id (x) pi_Q) o delta : A -> A (x) Q.
Matrix quotient_coaction(const ComoduleAlgebra& a, const GeneralizedQuotient& q);
// (pi_Q (x) id) o Delta : H -> Q (x) H and (id (x) pi_Q) o Delta : H -> H (x) Q.
Matrix left_quotient_coaction(const HopfAlgebraStructure& h, const GeneralizedQuotient& q);
Matrix right_quotient_coaction(const HopfAlgebraStructure& h, const GeneralizedQuotient& q);

// A^{co Q}.
struct CoinvariantSubalgebra {
  GeneralizedIdeal ideal;
  Subspace space;
};

CoinvariantSubalgebra coinvariants(const ComoduleAlgebra& a, const GeneralizedQuotient& q);
// A^{co H}.
Subspace coinvariants(const ComoduleAlgebra& a);

// L (x)_S A for a subspace L of A with L S in L: the subspace L (x) A of
// A (x) A modulo the balancing relations l s (x) b - l (x) s b.
struct BalancedTensor {
  Subspace domain;     // L (x) A inside A (x) A
  Subspace relations;  // inside domain
  QuotientSpace quotient;  // (A (x) A) / relations
  Subspace image;      // projection of domain
  Matrix lift;         // columns: representatives in domain of the image basis

  std::size_t dim() const { return image.dim(); }
  // Coordinates of the class of t (t in domain).
  Vector coordinates(std::span<const Scalar> t) const;
};

BalancedTensor balanced_tensor(const AlgebraStructure& a, const Subspace& left, const Subspace& over);
// A (x)_sub A. Throws ValidationFailure unless sub is a unital subalgebra.
BalancedTensor tensor_over(const ComoduleAlgebra& a, const Subspace& sub);

// A (x)_sub A -> A (x) Q, a (x) b -> a b_(0) (x) pi(b_(1)). Rows index A (x) Q.
// Throws WellDefinednessViolation unless sub is inside A^{co Q}.
Matrix can_general(const ComoduleAlgebra& a, const Subspace& sub, const GeneralizedQuotient& q);
bool is_galois(const ComoduleAlgebra& a, const GeneralizedQuotient& q);

// Kernel of delta_M (x) id - id (x) delta_N inside M (x) N, for
// delta_M : M -> M (x) Q and delta_N : N -> Q (x) N.
struct CotensorSpace {
  Matrix m_coaction;
  Matrix n_coaction;
  Subspace space;
};

CotensorSpace cotensor(const Matrix& m_coaction, const Matrix& n_coaction, std::size_t q_dim);
// A box_Q H with the coactions delta_Q and (pi (x) id) Delta.
CotensorSpace cotensor_with_hopf(const ComoduleAlgebra& a, const GeneralizedQuotient& q);

// sub (x)_B A -> A box_Q H, s (x) b -> s b_(0) (x) b_(1), B = A^{co H}.
// Columns index the balanced tensor, rows the cotensor basis.
Matrix can_s_cotensor(const ComoduleAlgebra& a, const Subspace& sub, const GeneralizedQuotient& q);

// For a left coideal subalgebra K and Q = H/K^+H: the map
// h (x) q -> h S(h'_(1)) (x)_K h'_(2) with h' the lift of q. Columns index H (x) Q.
Matrix can_k_inverse(const HopfAlgebraStructure& h, const Subspace& k);
// For Q with K = H^{co Q}: the map H box_Q H -> K (x) H, k (x) h -> k S(h_(1)) (x) h_(2),
// in coordinates of the cotensor basis and of K (x) H.
Matrix cocan_inverse(const HopfAlgebraStructure& h, const GeneralizedQuotient& q);
// K (x) H -> H box_Q H, k (x) h -> k h_(1) (x) h_(2) in the same coordinates.
Matrix cocan(const HopfAlgebraStructure& h, const GeneralizedQuotient& q);

}  // namespace hgw
