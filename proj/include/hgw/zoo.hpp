#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hgw/crossed_product.hpp"
#include "hgw/hopf.hpp"

namespace hgw::zoo {

// table[i][j] = index of g_i g_j.
using CayleyTable = std::vector<std::vector<std::size_t>>;

CayleyTable cyclic_group(std::size_t n);
// Permutations of {0,1,2} in lexicographic order; composition (s t)(i) = s(t(i)).
CayleyTable symmetric_group_s3();

// Throws ValidationFailure if the table is not a group.
void check_group(const CayleyTable& table);

// kG with Delta g = g (x) g and S(g) = g^{-1}.
HopfAlgebraStructure group_algebra(const FieldSpec& field, const CayleyTable& table,
                                   std::vector<std::string> names = {});
// Functions on G: the dual of kG on the delta basis.
HopfAlgebraStructure dual_group_algebra(const FieldSpec& field, const CayleyTable& table,
                                        std::vector<std::string> names = {});
// Sweedler's four-dimensional algebra, basis {1, g, x, gx}. Needs char != 2.
HopfAlgebraStructure sweedler(const FieldSpec& field);
// Taft algebra of dimension n^2 with basis g^i x^j at index j * n + i.
// q must be a primitive n-th root of unity in the field.
HopfAlgebraStructure taft(const FieldSpec& field, std::size_t n, const Scalar& q);

// Machine-checkable facts stored with a zoo entry.
struct ExpectedFacts {
  std::size_t dim = 0;
  bool commutative = false;
  bool cocommutative = false;
  unsigned antipode_order = 0;
  // Lattice sizes; -1 when not recorded. Recorded values were produced by
  // the exhaustive enumeration oracle and frozen afterwards.
  long generalized_ideals = -1;
  long coideal_subalgebras = -1;
};

struct ZooEntry {
  std::string name;
  HopfAlgebraStructure hopf;
  ExpectedFacts facts;
};

// Every Hopf algebra of the zoo, validated at construction.
std::vector<ZooEntry> hopf_zoo();
const ZooEntry& find(const std::vector<ZooEntry>& zoo, const std::string& name);

// k^n with the idempotent basis.
AlgebraStructure product_algebra(const FieldSpec& field, std::size_t n);
// M_n(k) on matrix units, E_ij at index i * n + j.
AlgebraStructure matrix_algebra(const FieldSpec& field, std::size_t n);

// GF(3)^2 # GF(3)C2 with trivial action and cocycle.
CrossedProduct trivial_smash();
// GF(3)^2 # GF(3)C2 with g swapping the idempotents.
CrossedProduct swap_crossed_product();
// k #_sigma GF(3)C2 with sigma(g, g) = -1.
CrossedProduct twisted_group_algebra();
// k # H4 over GF(3).
CrossedProduct trivial_over_sweedler();
// M_2(GF(3)) # GF(3)C2 with trivial action and cocycle.
CrossedProduct matrix_smash();

struct StandardExtension {
  std::string name;
  ComoduleAlgebra algebra;
  std::optional<CrossedProduct> crossed;
};
// H over itself for every zoo entry, then the crossed products above.
std::vector<StandardExtension> standard_extensions();

bool is_commutative(const AlgebraStructure& a);
bool is_cocommutative(const CoalgebraStructure& c);

}  // namespace hgw::zoo
