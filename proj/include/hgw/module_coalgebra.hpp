#pragma once

#include <string>
#include <vector>

#include "hgw/hopf.hpp"
#include "hgw/poset.hpp"
#include "hgw/substructures.hpp"

namespace hgw {

// Coalgebra C with a left H-action H (x) C -> C that is a coalgebra map.
struct ModuleCoalgebra {
  CoalgebraStructure coalgebra;
  HopfAlgebraStructure hopf;
  Matrix action;  // dim C x (dim H * dim C), column h * dim C + c holds h . c
  std::vector<std::string> basis_names;

  std::size_t dim() const { return coalgebra.dim; }
  const FieldSpec& field() const { return coalgebra.field; }
  Vector act(std::span<const Scalar> h, std::span<const Scalar> c) const { return action.apply(tensor(h, c)); }
};

// H acting on itself by left multiplication.
ModuleCoalgebra regular_module_coalgebra(const HopfAlgebraStructure& h);
// The coalgebra of H with h . c = eps(h) c.
ModuleCoalgebra trivial_module_coalgebra(const HopfAlgebraStructure& h);

ValidationReport validate_module_coalgebra(const ModuleCoalgebra& c);

// eps(J) = 0 and Delta(J) in J (x) C + C (x) J.
bool is_coideal(const CoalgebraStructure& c, const Subspace& j);

// span{k . c : k in K^+, c in C}, with K^+ = K cap ker eps.
Subspace k_plus_c(const ModuleCoalgebra& c, const Subspace& k);

// C^K = C / K^+C with its quotient coalgebra.
struct CoextensionQuotient {
  Subspace k_space;
  QuotientSpace quotient;
  Matrix comul;
  Matrix counit;

  std::size_t dim() const { return quotient.dim(); }
};

// Requires k to be a left coideal of H containing 1, or the whole of H.
CoextensionQuotient invariant_quotient(const ModuleCoalgebra& c, const Subspace& k);

// C box_{C^K} C with the coactions (id (x) pi) Delta and (pi (x) id) Delta.
Subspace coext_cotensor(const ModuleCoalgebra& c, const Subspace& k);

// K (x) C -> C box_{C^K} C, k (x) c -> k c_(1) (x) c_(2). Columns: coordinates
// of K (x) C inside H (x) C; rows: coordinates of the cotensor basis. K must be
// a left coideal; when 1 is not in K the quotient is still C / K^+C.
Matrix can_coext(const ModuleCoalgebra& c, const Subspace& k);
bool is_coext_galois(const ModuleCoalgebra& c, const Subspace& k);

// Left coideals of H containing 1 (ordered by inclusion) against the coideals
// J inside H^+C (C/J1 <= C/J2 iff J2 in J1). Forward I -> (I + k1)^+C,
// backward J -> sum of the I with I^+C in J.
struct CoextConnection {
  std::vector<Subspace> coideals;   // left poset, canonical order
  std::vector<Subspace> quotients;  // right poset as kernels J, canonical order
  FinitePoset left;
  FinitePoset right;
  GaloisConnectionReport report;
};

CoextConnection coext_connection(const ModuleCoalgebra& c, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace hgw
