#pragma once

#include <string>
#include <vector>

#include "hgw/comodule_algebra.hpp"
#include "hgw/poset.hpp"
#include "hgw/substructures.hpp"

namespace hgw {

enum class PsiStrategy { Formula, Enumerate, Crossed };
const char* to_string(PsiStrategy s);

// phi(Q) = A^{co Q}.
Subspace phi(const ComoduleAlgebra& a, const GeneralizedQuotient& q);

// A is H with coaction Delta.
bool is_regular(const ComoduleAlgebra& a);

// psi(S), the largest Q with S in A^{co Q}.
//   Formula:   A = H and S a left coideal subalgebra; H / S^+H.
//   Enumerate: finite field; meet of the ideals I with S in A^{co H/I}.
//   Crossed:   needs crossed product data, see crossed_product.hpp.
// Throws UnsupportedStrategy when the strategy does not apply and
// ValidationFailure when S is not a unital subalgebra.
GeneralizedQuotient psi(const ComoduleAlgebra& a, const Subspace& sub, PsiStrategy strategy,
                        std::uint64_t cap = kDefaultEnumerationCap);
// Enumerate strategy over a precomputed family of ideals.
GeneralizedQuotient psi_over(const ComoduleAlgebra& a, const Subspace& sub, std::span<const GeneralizedIdeal> ideals);

bool is_closed_quotient(const ComoduleAlgebra& a, const GeneralizedQuotient& q, PsiStrategy strategy,
                        std::uint64_t cap = kDefaultEnumerationCap);
bool is_closed_subalgebra(const ComoduleAlgebra& a, const Subspace& sub, PsiStrategy strategy,
                          std::uint64_t cap = kDefaultEnumerationCap);

// Unital subalgebras S with A^{co H} in S, canonical order.
std::vector<Subspace> enumerate_intermediate_subalgebras(const ComoduleAlgebra& a,
                                                         std::uint64_t cap = kDefaultEnumerationCap);

// Quot_gen(H) (displayed by ideals, Q1 <= Q2 iff I2 in I1) against a list of
// subalgebras ordered by inclusion. forward = phi, backward = psi.
struct ConnectionReport {
  std::vector<GeneralizedIdeal> ideals;
  std::vector<Subspace> subalgebras;
  FinitePoset quotient_poset;
  FinitePoset subalgebra_poset;
  GaloisConnectionReport connection;
  bool triple_composition = false;  // phi psi phi = phi and psi phi psi = psi

  bool bijection() const {
    return connection.laws_hold() && connection.all_closed() && connection.bijection_on_closed;
  }
};

// The connection of A against Quot_gen(H) with the subalgebras between A^{co H} and A.
ConnectionReport comodule_connection(const ComoduleAlgebra& a, std::uint64_t cap = kDefaultEnumerationCap);
// Same, against a given list of subalgebras that must contain every phi(Q).
ConnectionReport connection_over(const ComoduleAlgebra& a, std::vector<GeneralizedIdeal> ideals,
                                 std::vector<Subspace> subalgebras);

// can_{K*} against (can_K)^T. The standard pairing turns the left coideal K
// into the left ideal coideal K^perp of H*, so the dual side is the canonical
// map of H* as a left K*-comodule algebra, K* = H*/K^perp:
// a (x)_B b -> a_(1) (x) a_(2) b with B = (K^+H)^perp.
struct DualityCheck {
  bool coinvariants_match = false;  // (H / K^+H)^* = (H*)^{co K*}
  bool relations_match = false;     // (H box H)^perp = balancing relations of H* (x)_B H*
  bool matrices_match = false;      // (can_K)^T equals can_{K*} on H* (x) H*
  bool dual_bijective = false;

  bool holds() const { return coinvariants_match && relations_match && matrices_match && dual_bijective; }
};
DualityCheck duality_check(const HopfAlgebraStructure& h, const Subspace& k);

struct TakeuchiReport {
  ConnectionReport connection;       // subalgebras = left coideal subalgebras
  bool strategies_agree = false;     // Formula and Enumerate give the same psi
  std::vector<bool> quotient_galois; // is_galois(H, Q) per ideal
  std::vector<bool> coext_galois;    // can_coext(H, K) bijective per subalgebra
  bool closed_quotient_iff_galois = false;
  bool closed_subalgebra_iff_coext = false;
  bool explicit_inverses_exact = false;  // canK and cocanK inverse formulas
  std::vector<bool> duality;             // per subalgebra
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};
TakeuchiReport takeuchi_report(const HopfAlgebraStructure& h, std::uint64_t cap = kDefaultEnumerationCap);

// A^op over H^op with the same coaction. Throws NotInvertible for a
// non-bijective antipode.
ComoduleAlgebra opposite_comodule_algebra(const ComoduleAlgebra& a);
// phi^op(Q^op) == phi(Q) as subspaces, with Q^op = H^op / S(I).
bool opposite_consistency(const ComoduleAlgebra& a, const GeneralizedQuotient& q);
// psi^op(S) == psi(S)^op, both by enumeration.
bool opposite_consistency_psi(const ComoduleAlgebra& a, const Subspace& sub, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace hgw
