#pragma once

#include <string>
#include <vector>

#include "hgw/comodule_algebra.hpp"
#include "hgw/galois_engine.hpp"
#include "hgw/substructures.hpp"

namespace hgw {

// H measuring B: h . 1 = eps(h) 1, h . (ab) = (h_(1) . a)(h_(2) . b), 1 . b = b.
struct MeasuringAction {
  AlgebraStructure b_algebra;
  HopfAlgebraStructure hopf;
  Matrix action;  // dim B x (dim H * dim B), column h * dim B + b holds h . b
  std::vector<std::string> b_names;

  std::size_t b_dim() const { return b_algebra.dim; }
  std::size_t h_dim() const { return hopf.dim(); }
  const FieldSpec& field() const { return b_algebra.field; }
  Vector act(std::size_t h, std::span<const Scalar> b) const;
};

// sigma : H (x) H -> B, column h * dim H + k; inverse is its convolution inverse.
struct Cocycle {
  Matrix sigma;
  Matrix inverse;
};

// h . b = eps(h) b.
MeasuringAction trivial_action(const AlgebraStructure& b, const HopfAlgebraStructure& h, std::vector<std::string> b_names = {});
// sigma(h, k) = eps(h) eps(k) 1_B.
Matrix trivial_sigma(const MeasuringAction& action);
// Computes the convolution inverse in Hom(H (x) H, B). Throws NotConvolutionInvertible.
Cocycle make_cocycle(const MeasuringAction& action, Matrix sigma);

ValidationReport validate_measuring(const MeasuringAction& action);
// Convolution inverse, normalization, cocycle identity
//   h_(1) . sigma(k_(1), l_(1)) sigma(h_(2), k_(2) l_(2)) = sigma(h_(1), k_(1)) sigma(h_(2) k_(2), l)
// and twisted module identity
//   h_(1) . (k_(1) . b) sigma(h_(2), k_(2)) = sigma(h_(1), k_(1)) (h_(2) k_(2) . b).
ValidationReport validate_cocycle(const MeasuringAction& action, const Cocycle& cocycle);

// B #_sigma H on B (x) H, basis index b * dim H + h, with coaction id (x) Delta and
// (a # h)(b # k) = a (h_(1) . b) sigma(h_(2), k_(1)) # h_(3) k_(2).
struct CrossedProduct {
  MeasuringAction action;
  Cocycle cocycle;
  ComoduleAlgebra algebra;

  std::size_t b_dim() const { return action.b_dim(); }
  std::size_t h_dim() const { return action.h_dim(); }
  // B # 1
  Subspace base() const;
  // B # K
  Subspace over(const Subspace& k) const;
};

// Throws ValidationFailure if the measuring, the cocycle or the built comodule algebra fails.
CrossedProduct build_crossed_product(MeasuringAction action, Cocycle cocycle);

struct CleavingMap {
  Matrix gamma;    // h -> 1_B # h
  Matrix inverse;  // convolution inverse in Hom(H, A)
};
// Asserts H-colinearity; throws NotConvolutionInvertible.
CleavingMap cleaving_map(const CrossedProduct& cp);

// Smallest left coideal subalgebra K with sub in B # K.
LeftCoidealSubalgebra omega(const CrossedProduct& cp, const Subspace& sub);
// psi = psi_H o omega.
GeneralizedQuotient psi_crossed(const CrossedProduct& cp, const Subspace& sub);
// Strategy dispatch over the crossed product; Crossed is available here.
GeneralizedQuotient psi(const CrossedProduct& cp, const Subspace& sub, PsiStrategy strategy,
                        std::uint64_t cap = kDefaultEnumerationCap);

struct CrossedClosedness {
  bool closed = false;
  bool galois = false;
  bool splitting = false;  // A^{co Q} = B # H^{co Q}
};
CrossedClosedness crossed_closedness(const CrossedProduct& cp, const GeneralizedQuotient& q);

// S (x)_B A -> (B # K) (x) H with K = H^{co psi(S)}, a (x)_B (b # h) -> a (b # 1) (x) h.
// Columns: balanced tensor basis; rows: basis of (B # K) (x) H inside A (x) H.
Matrix alpha_map(const CrossedProduct& cp, const Subspace& sub);
// (B # K) (x) H -> (B # K) (x) H, a # k (x) h -> a sigma(k_(1), h_(1)) # k_(2) (x) h_(2).
Matrix gamma_map(const CrossedProduct& cp, const Subspace& k);

}  // namespace hgw
