#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hgw/matrix.hpp"

namespace hgw {

// Unital associative algebra given by structure constants.
struct AlgebraStructure {
  FieldSpec field;
  std::size_t dim;
  Matrix mul;   // dim x dim^2, column a*dim+b holds e_a e_b
  Vector unit;  // dim

  Vector product(std::span<const Scalar> a, std::span<const Scalar> b) const;
  Vector basis_product(std::size_t a, std::size_t b) const { return mul.column(a * dim + b); }
  // Matrices of x -> v x and x -> x v.
  Matrix left_multiplication(std::span<const Scalar> v) const;
  Matrix right_multiplication(std::span<const Scalar> v) const;
  friend bool operator==(const AlgebraStructure&, const AlgebraStructure&) = default;
};

struct CoalgebraStructure {
  FieldSpec field;
  std::size_t dim;
  Matrix comul;   // dim^2 x dim
  Matrix counit;  // 1 x dim
  friend bool operator==(const CoalgebraStructure&, const CoalgebraStructure&) = default;
};

// One summand c * e_left (x) e_right of a coproduct.
struct TensorTerm {
  std::size_t left;
  std::size_t right;
  Scalar coeff;
};

// Nonzero terms of Delta(e_i).
std::vector<TensorTerm> coproduct_terms(const CoalgebraStructure& c, std::size_t i);
// Nonzero terms of a vector in V (x) W with dim W = n.
std::vector<TensorTerm> tensor_terms(std::span<const Scalar> t, std::size_t n);

struct HopfAlgebraStructure {
  AlgebraStructure algebra;
  CoalgebraStructure coalgebra;
  Matrix antipode;  // dim x dim
  std::vector<std::string> basis_names;

  const FieldSpec& field() const { return algebra.field; }
  std::size_t dim() const { return algebra.dim; }
  Vector unit() const { return algebra.unit; }
  Vector basis(std::size_t i) const { return basis_vector(field(), dim(), i); }
  Scalar counit(std::span<const Scalar> v) const { return coalgebra.counit.apply(v)[0]; }
  Vector comul(std::span<const Scalar> v) const { return coalgebra.comul.apply(v); }
  Vector mul(std::span<const Scalar> a, std::span<const Scalar> b) const { return algebra.product(a, b); }

  // Structural equality; basis names are labels and do not participate.
  friend bool operator==(const HopfAlgebraStructure& a, const HopfAlgebraStructure& b) {
    return a.algebra == b.algebra && a.coalgebra == b.coalgebra && a.antipode == b.antipode;
  }
};

using HopfPtr = std::shared_ptr<const HopfAlgebraStructure>;

struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;  // basis indices
  Vector lhs;
  Vector rhs;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
  void merge(const ValidationReport& other);
  std::string summary() const;
};

ValidationReport validate_algebra(const AlgebraStructure& a);
ValidationReport validate_coalgebra(const CoalgebraStructure& c);
ValidationReport validate_hopf(const HopfAlgebraStructure& h);

// Dual Hopf algebra on the dual basis; all structure maps transposed.
HopfAlgebraStructure dual(const HopfAlgebraStructure& h);
// Opposite multiplication with antipode S^{-1}. Throws NotInvertible.
HopfAlgebraStructure opposite(const HopfAlgebraStructure& h);

// Order of the antipode as a matrix (smallest k >= 1 with S^k = id), up to
// the given bound; 0 if not reached.
unsigned antipode_order(const HopfAlgebraStructure& h, unsigned bound = 64);

// Tensor product coalgebra C (x) D.
CoalgebraStructure tensor_coalgebra(const CoalgebraStructure& c, const CoalgebraStructure& d);
// Product of x and y in A (x) B, computed from sparse terms.
Vector tensor_product(const AlgebraStructure& a, const AlgebraStructure& b, std::span<const Scalar> x,
                      std::span<const Scalar> y);
Vector tensor_square_product(const AlgebraStructure& a, std::span<const Scalar> x, std::span<const Scalar> y);
// Tensor product algebra A (x) B.
AlgebraStructure tensor_algebra(const AlgebraStructure& a, const AlgebraStructure& b);

// f * g = mul o (f (x) g) o comul for f, g : C -> A.
Matrix convolve(const Matrix& f, const Matrix& g, const CoalgebraStructure& c, const AlgebraStructure& a);
// unit o counit : C -> A.
Matrix convolution_unit(const CoalgebraStructure& c, const AlgebraStructure& a);
// Two-sided convolution inverse of f : C -> A. Throws NotConvolutionInvertible.
Matrix convolution_invert(const Matrix& f, const CoalgebraStructure& c, const AlgebraStructure& a);

}  // namespace hgw
