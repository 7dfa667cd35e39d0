#include "hgw/comodule_algebra.hpp"

#include "hgw/errors.hpp"

namespace hgw {

namespace {

void check(ValidationReport& report, const char* axiom, std::vector<std::size_t> witness, Vector lhs, Vector rhs) {
  if (lhs != rhs) report.violations.push_back({axiom, std::move(witness), std::move(lhs), std::move(rhs)});
}

// sum t_ij (e_i (x) 1) delta(e_j), then post applied to the right leg.
Vector twisted_coaction(const AlgebraStructure& a, const Matrix& coaction, std::size_t n, const Matrix& post,
                        std::span<const Scalar> t) {
  const std::size_t m = a.dim, k = post.rows();
  Vector out = zero_vector(a.field, m * k);
  for (const auto& term : tensor_terms(t, m)) {
    for (const auto& d : tensor_terms(coaction.column(term.right), n)) {
      Vector left = a.basis_product(term.left, d.left);
      Scalar c = term.coeff * d.coeff;
      for (std::size_t i = 0; i < m; ++i) {
        if (left[i].is_zero()) continue;
        Scalar ci = c * left[i];
        for (std::size_t r = 0; r < k; ++r)
          if (!post(r, d.right).is_zero()) out[i * k + r] += ci * post(r, d.right);
      }
    }
  }
  return out;
}

// sum t_ij e_i S(e_l) (x) e_r over Delta(e_j) = sum e_l (x) e_r.
Vector antipode_untwist(const HopfAlgebraStructure& h, std::span<const Scalar> t) {
  const std::size_t n = h.dim();
  Vector out = zero_vector(h.field(), n * n);
  for (const auto& term : tensor_terms(t, n))
    for (const auto& d : coproduct_terms(h.coalgebra, term.right)) {
      Vector left = h.mul(h.basis(term.left), h.antipode.column(d.left));
      axpy(out, term.coeff * d.coeff, tensor(left, h.basis(d.right)));
    }
  return out;
}

bool is_bijective_square(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

}  // namespace

ComoduleAlgebra regular_comodule_algebra(const HopfAlgebraStructure& h) {
  return ComoduleAlgebra{h.algebra, h, h.coalgebra.comul, h.basis_names};
}

ValidationReport validate_comodule_algebra(const ComoduleAlgebra& a) {
  const std::size_t m = a.dim(), n = a.hopf.dim();
  if (!(a.hopf.field() == a.field())) throw FieldMismatch("comodule algebra over a different field");
  if (a.coaction.rows() != m * n || a.coaction.cols() != m) throw DimensionMismatch("coaction dimensions");
  ValidationReport report = validate_algebra(a.algebra);
  for (std::size_t i = 0; i < m; ++i) {
    Vector d = a.coaction.column(i);
    check(report, "coaction coassociativity", {i}, apply_left(a.coaction, d, n), apply_right(a.hopf.coalgebra.comul, d, m));
    check(report, "coaction counit", {i}, apply_right(a.hopf.coalgebra.counit, d, m), basis_vector(a.field(), m, i));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      check(report, "coaction multiplicative", {i, j}, a.coact(a.algebra.basis_product(i, j)),
            tensor_product(a.algebra, a.hopf.algebra, a.coaction.column(i), a.coaction.column(j)));
  check(report, "coaction unital", {}, a.coact(a.algebra.unit), tensor(a.algebra.unit, a.hopf.unit()));
  return report;
}

Matrix quotient_coaction(const ComoduleAlgebra& a, const GeneralizedQuotient& q) {
  Matrix out(a.field(), a.dim() * q.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.set_column(i, apply_right(q.projection(), a.coaction.column(i), a.dim()));
  return out;
}

Matrix left_quotient_coaction(const HopfAlgebraStructure& h, const GeneralizedQuotient& q) {
  Matrix out(h.field(), q.dim() * h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    out.set_column(i, apply_left(q.projection(), h.coalgebra.comul.column(i), h.dim()));
  return out;
}

Matrix right_quotient_coaction(const HopfAlgebraStructure& h, const GeneralizedQuotient& q) {
  Matrix out(h.field(), h.dim() * q.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    out.set_column(i, apply_right(q.projection(), h.coalgebra.comul.column(i), h.dim()));
  return out;
}

CoinvariantSubalgebra coinvariants(const ComoduleAlgebra& a, const GeneralizedQuotient& q) {
  Matrix delta_q = quotient_coaction(a, q);
  Vector one_q = q.projection().apply(a.hopf.unit());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < q.dim(); ++j) delta_q(i * q.dim() + j, i) -= one_q[j];
  Subspace space = kernel(delta_q);
  if (!is_unital_subalgebra(a.algebra, space)) throw Error("internal: coinvariants are not a subalgebra");
  return CoinvariantSubalgebra{q.ideal, std::move(space)};
}

Subspace coinvariants(const ComoduleAlgebra& a) { return coinvariants(a, identity_quotient(a.hopf)).space; }

Vector BalancedTensor::coordinates(std::span<const Scalar> t) const {
  if (!domain.contains(t)) throw DimensionMismatch("element outside the balanced tensor domain");
  return image.coordinates(quotient.projection.apply(t));
}

BalancedTensor balanced_tensor(const AlgebraStructure& a, const Subspace& left, const Subspace& over) {
  const std::size_t m = a.dim;
  const FieldSpec& f = a.field;
  Subspace domain = subspace_tensor(left, Subspace::full(f, m));
  std::vector<Vector> rels;
  for (std::size_t i = 0; i < left.dim(); ++i)
    for (std::size_t s = 0; s < over.dim(); ++s) {
      Vector ls = a.product(left.basis_vector(i), over.basis_vector(s));
      if (!left.contains(ls)) throw ValidationFailure("left factor is not a right module over the base");
      for (std::size_t c = 0; c < m; ++c) {
        Vector ec = basis_vector(f, m, c);
        rels.push_back(sub(tensor(ls, ec), tensor(left.basis_vector(i), a.product(over.basis_vector(s), ec))));
      }
    }
  Subspace relations = Subspace::span(f, m * m, rels);
  QuotientSpace q = quotient(m * m, relations);
  Subspace img = image(q.projection, domain);
  Matrix lift(f, m * m, img.dim());
  for (std::size_t j = 0; j < img.dim(); ++j) lift.set_column(j, q.section.apply(img.basis_vector(j)));
  return BalancedTensor{std::move(domain), std::move(relations), std::move(q), std::move(img), std::move(lift)};
}

BalancedTensor tensor_over(const ComoduleAlgebra& a, const Subspace& sub) {
  if (!is_unital_subalgebra(a.algebra, sub)) throw ValidationFailure("tensor_over: not a unital subalgebra");
  return balanced_tensor(a.algebra, Subspace::full(a.field(), a.dim()), sub);
}

Matrix can_general(const ComoduleAlgebra& a, const Subspace& sub, const GeneralizedQuotient& q) {
  if (!coinvariants(a, q).space.contains(sub))
    throw WellDefinednessViolation("can: subalgebra is not inside the Q-coinvariants");
  BalancedTensor bt = tensor_over(a, sub);
  const std::size_t m = a.dim();
  Matrix out(a.field(), m * q.dim(), bt.dim());
  for (std::size_t j = 0; j < bt.dim(); ++j)
    out.set_column(j, twisted_coaction(a.algebra, a.coaction, a.hopf.dim(), q.projection(), bt.lift.column(j)));
  for (std::size_t r = 0; r < bt.relations.dim(); ++r)
    if (!is_zero(twisted_coaction(a.algebra, a.coaction, a.hopf.dim(), q.projection(), bt.relations.basis_vector(r))))
      throw Error("internal: can does not vanish on the balancing relations");
  return out;
}

bool is_galois(const ComoduleAlgebra& a, const GeneralizedQuotient& q) {
  return is_bijective_square(can_general(a, coinvariants(a, q).space, q));
}

CotensorSpace cotensor(const Matrix& m_coaction, const Matrix& n_coaction, std::size_t q_dim) {
  if (q_dim == 0 || m_coaction.rows() != m_coaction.cols() * q_dim || n_coaction.rows() != n_coaction.cols() * q_dim)
    throw DimensionMismatch("cotensor coactions");
  const FieldSpec& f = m_coaction.field();
  Matrix eq = kron(m_coaction, Matrix::identity(f, n_coaction.cols())) -
              kron(Matrix::identity(f, m_coaction.cols()), n_coaction);
  return CotensorSpace{m_coaction, n_coaction, kernel(eq)};
}

CotensorSpace cotensor_with_hopf(const ComoduleAlgebra& a, const GeneralizedQuotient& q) {
  return cotensor(quotient_coaction(a, q), left_quotient_coaction(a.hopf, q), q.dim());
}

Matrix can_s_cotensor(const ComoduleAlgebra& a, const Subspace& sub, const GeneralizedQuotient& q) {
  if (!coinvariants(a, q).space.contains(sub))
    throw WellDefinednessViolation("can_S: subalgebra is not inside the Q-coinvariants");
  BalancedTensor bt = balanced_tensor(a.algebra, sub, coinvariants(a));
  CotensorSpace target = cotensor_with_hopf(a, q);
  const Matrix id_h = Matrix::identity(a.field(), a.hopf.dim());
  Matrix out(a.field(), target.space.dim(), bt.dim());
  for (std::size_t j = 0; j < bt.dim(); ++j) {
    Vector v = twisted_coaction(a.algebra, a.coaction, a.hopf.dim(), id_h, bt.lift.column(j));
    if (!target.space.contains(v)) throw Error("can_S: image escapes the cotensor product");
    out.set_column(j, target.space.coordinates(v));
  }
  return out;
}

Matrix can_k_inverse(const HopfAlgebraStructure& h, const Subspace& k) {
  GeneralizedQuotient q = generalized_quotient(h, ideal_from_subalgebra(h, k));
  BalancedTensor bt = balanced_tensor(h.algebra, Subspace::full(h.field(), h.dim()), k);
  const std::size_t n = h.dim();
  Matrix out(h.field(), bt.dim(), n * q.dim());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < q.dim(); ++j)
      out.set_column(a * q.dim() + j, bt.coordinates(antipode_untwist(h, tensor(h.basis(a), q.quotient.section.column(j)))));
  return out;
}

Matrix cocan(const HopfAlgebraStructure& h, const GeneralizedQuotient& q) {
  ComoduleAlgebra reg = regular_comodule_algebra(h);
  Subspace domain = subspace_tensor(coinvariants(reg, q).space, Subspace::full(h.field(), h.dim()));
  CotensorSpace target = cotensor_with_hopf(reg, q);
  const Matrix id_h = Matrix::identity(h.field(), h.dim());
  Matrix out(h.field(), target.space.dim(), domain.dim());
  for (std::size_t j = 0; j < domain.dim(); ++j)
    out.set_column(j, target.space.coordinates(
                          twisted_coaction(h.algebra, h.coalgebra.comul, h.dim(), id_h, domain.basis_vector(j))));
  return out;
}

Matrix cocan_inverse(const HopfAlgebraStructure& h, const GeneralizedQuotient& q) {
  ComoduleAlgebra reg = regular_comodule_algebra(h);
  Subspace domain = subspace_tensor(coinvariants(reg, q).space, Subspace::full(h.field(), h.dim()));
  CotensorSpace source = cotensor_with_hopf(reg, q);
  Matrix out(h.field(), domain.dim(), source.space.dim());
  for (std::size_t j = 0; j < source.space.dim(); ++j)
    out.set_column(j, domain.coordinates(antipode_untwist(h, source.space.basis_vector(j))));
  return out;
}

}  // namespace hgw
