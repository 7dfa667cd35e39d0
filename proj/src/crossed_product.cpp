#include "hgw/crossed_product.hpp"

#include "hgw/errors.hpp"

namespace hgw {

namespace {

void check(ValidationReport& report, const char* axiom, std::vector<std::size_t> witness, Vector lhs, Vector rhs) {
  if (lhs != rhs) report.violations.push_back({axiom, std::move(witness), std::move(lhs), std::move(rhs)});
}

Vector sigma_of(const Matrix& sigma, std::size_t n, std::size_t h, std::size_t k) { return sigma.column(h * n + k); }

// Delta^2(e_h) as (h1, h2, h3, coeff).
struct Triple {
  std::size_t a, b, c;
  Scalar coeff;
};
std::vector<Triple> double_coproduct(const CoalgebraStructure& c, std::size_t h) {
  std::vector<Triple> out;
  for (const auto& s : coproduct_terms(c, h))
    for (const auto& t : coproduct_terms(c, s.right)) out.push_back({s.left, t.left, t.right, s.coeff * t.coeff});
  return out;
}

Matrix crossed_multiplication(const MeasuringAction& act, const Matrix& sigma) {
  const std::size_t m = act.b_dim(), n = act.h_dim(), d = m * n;
  const FieldSpec& f = act.field();
  const AlgebraStructure& b = act.b_algebra;
  const AlgebraStructure& h = act.hopf.algebra;
  Matrix mul(f, d, d * d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t p = 0; p < n; ++p) {
      auto hs = double_coproduct(act.hopf.coalgebra, p);
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t q = 0; q < n; ++q) {
          Vector out = zero_vector(f, d);
          for (const auto& t : hs) {
            Vector left = b.product(basis_vector(f, m, i), act.act(t.a, basis_vector(f, m, j)));
            for (const auto& u : coproduct_terms(act.hopf.coalgebra, q))
              axpy(out, t.coeff * u.coeff,
                   tensor(b.product(left, sigma_of(sigma, n, t.b, u.left)), h.basis_product(t.c, u.right)));
          }
          mul.set_column((i * n + p) * d + (j * n + q), out);
        }
    }
  return mul;
}

}  // namespace

Vector MeasuringAction::act(std::size_t h, std::span<const Scalar> b) const {
  Vector out = zero_vector(field(), b_dim());
  for (std::size_t j = 0; j < b_dim(); ++j)
    if (!b[j].is_zero()) axpy(out, b[j], action.column(h * b_dim() + j));
  return out;
}

MeasuringAction trivial_action(const AlgebraStructure& b, const HopfAlgebraStructure& h, std::vector<std::string> b_names) {
  const std::size_t m = b.dim, n = h.dim();
  Matrix action(b.field, m, n * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < m; ++j) action(j, a * m + j) = h.coalgebra.counit(0, a);
  return MeasuringAction{b, h, std::move(action), std::move(b_names)};
}

Matrix trivial_sigma(const MeasuringAction& action) {
  const std::size_t n = action.h_dim();
  Matrix sigma(action.field(), action.b_dim(), n * n);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      sigma.set_column(h * n + k, scale(action.hopf.coalgebra.counit(0, h) * action.hopf.coalgebra.counit(0, k),
                                        action.b_algebra.unit));
  return sigma;
}

Cocycle make_cocycle(const MeasuringAction& action, Matrix sigma) {
  if (sigma.rows() != action.b_dim() || sigma.cols() != action.h_dim() * action.h_dim())
    throw DimensionMismatch("sigma dimensions");
  CoalgebraStructure hh = tensor_coalgebra(action.hopf.coalgebra, action.hopf.coalgebra);
  Matrix inv = convolution_invert(sigma, hh, action.b_algebra);
  return Cocycle{std::move(sigma), std::move(inv)};
}

ValidationReport validate_measuring(const MeasuringAction& act) {
  const std::size_t m = act.b_dim(), n = act.h_dim();
  const FieldSpec& f = act.field();
  if (!(act.hopf.field() == f)) throw FieldMismatch("measuring over a different field");
  if (act.action.rows() != m || act.action.cols() != n * m) throw DimensionMismatch("action dimensions");
  ValidationReport report = validate_algebra(act.b_algebra);
  const AlgebraStructure& b = act.b_algebra;
  for (std::size_t j = 0; j < m; ++j) {
    Vector unit_act = zero_vector(f, m);
    for (std::size_t h = 0; h < n; ++h)
      if (!act.hopf.algebra.unit[h].is_zero()) axpy(unit_act, act.hopf.algebra.unit[h], act.act(h, basis_vector(f, m, j)));
    check(report, "unit of H acts trivially", {j}, unit_act, basis_vector(f, m, j));
  }
  for (std::size_t h = 0; h < n; ++h) {
    check(report, "h . 1 = eps(h) 1", {h}, act.act(h, b.unit), scale(act.hopf.coalgebra.counit(0, h), b.unit));
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        Vector rhs = zero_vector(f, m);
        for (const auto& t : coproduct_terms(act.hopf.coalgebra, h))
          axpy(rhs, t.coeff, b.product(act.act(t.left, basis_vector(f, m, x)), act.act(t.right, basis_vector(f, m, y))));
        check(report, "measuring", {h, x, y}, act.act(h, b.basis_product(x, y)), rhs);
      }
  }
  return report;
}

ValidationReport validate_cocycle(const MeasuringAction& act, const Cocycle& cc) {
  const std::size_t m = act.b_dim(), n = act.h_dim();
  const FieldSpec& f = act.field();
  const AlgebraStructure& b = act.b_algebra;
  const HopfAlgebraStructure& h = act.hopf;
  if (cc.sigma.rows() != m || cc.sigma.cols() != n * n || cc.inverse.rows() != m || cc.inverse.cols() != n * n)
    throw DimensionMismatch("cocycle dimensions");
  ValidationReport report;
  CoalgebraStructure hh = tensor_coalgebra(h.coalgebra, h.coalgebra);
  Matrix unit = convolution_unit(hh, b);
  Matrix left = convolve(cc.sigma, cc.inverse, hh, b), right = convolve(cc.inverse, cc.sigma, hh, b);
  for (std::size_t c = 0; c < n * n; ++c) {
    check(report, "sigma * sigma^-1 = unit", {c / n, c % n}, left.column(c), unit.column(c));
    check(report, "sigma^-1 * sigma = unit", {c / n, c % n}, right.column(c), unit.column(c));
  }
  // normalization on basis pairs (1, e_k), (e_k, 1) via the unit of H
  for (std::size_t k = 0; k < n; ++k) {
    Vector s1 = zero_vector(f, m), s2 = zero_vector(f, m);
    for (std::size_t u = 0; u < n; ++u)
      if (!h.algebra.unit[u].is_zero()) {
        axpy(s1, h.algebra.unit[u], sigma_of(cc.sigma, n, u, k));
        axpy(s2, h.algebra.unit[u], sigma_of(cc.sigma, n, k, u));
      }
    Vector expected = scale(h.coalgebra.counit(0, k), b.unit);
    check(report, "normalization sigma(1, h)", {0, k}, s1, expected);
    check(report, "normalization sigma(h, 1)", {k, 0}, s2, expected);
  }
  auto sigma_v = [&](std::size_t x, std::span<const Scalar> y) {
    Vector out = zero_vector(f, m);
    for (std::size_t i = 0; i < n; ++i)
      if (!y[i].is_zero()) axpy(out, y[i], sigma_of(cc.sigma, n, x, i));
    return out;
  };
  auto sigma_vl = [&](std::span<const Scalar> x, std::size_t y) {
    Vector out = zero_vector(f, m);
    for (std::size_t i = 0; i < n; ++i)
      if (!x[i].is_zero()) axpy(out, x[i], sigma_of(cc.sigma, n, i, y));
    return out;
  };
  auto act_v = [&](std::span<const Scalar> x, std::span<const Scalar> bb) {
    Vector out = zero_vector(f, m);
    for (std::size_t i = 0; i < n; ++i)
      if (!x[i].is_zero()) axpy(out, x[i], act.act(i, bb));
    return out;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto dx = coproduct_terms(h.coalgebra, x), dy = coproduct_terms(h.coalgebra, y);
      for (std::size_t z = 0; z < n; ++z) {
        auto dz = coproduct_terms(h.coalgebra, z);
        Vector lhs = zero_vector(f, m), rhs = zero_vector(f, m);
        for (const auto& s : dx)
          for (const auto& t : dy) {
            for (const auto& u : dz)
              axpy(lhs, s.coeff * t.coeff * u.coeff,
                   b.product(act.act(s.left, sigma_of(cc.sigma, n, t.left, u.left)),
                             sigma_v(s.right, h.algebra.basis_product(t.right, u.right))));
            axpy(rhs, s.coeff * t.coeff,
                 b.product(sigma_of(cc.sigma, n, s.left, t.left), sigma_vl(h.algebra.basis_product(s.right, t.right), z)));
          }
        check(report, "cocycle identity", {x, y, z}, lhs, rhs);
      }
      for (std::size_t j = 0; j < m; ++j) {
        Vector lhs = zero_vector(f, m), rhs = zero_vector(f, m);
        for (const auto& s : dx)
          for (const auto& t : dy) {
            axpy(lhs, s.coeff * t.coeff,
                 b.product(act.act(s.left, act.act(t.left, basis_vector(f, m, j))), sigma_of(cc.sigma, n, s.right, t.right)));
            axpy(rhs, s.coeff * t.coeff,
                 b.product(sigma_of(cc.sigma, n, s.left, t.left),
                           act_v(h.algebra.basis_product(s.right, t.right), basis_vector(f, m, j))));
          }
        check(report, "twisted module", {x, y, j}, lhs, rhs);
      }
    }
  return report;
}

Subspace CrossedProduct::base() const {
  return subspace_tensor(Subspace::full(action.field(), b_dim()), Subspace::span(action.field(), h_dim(), {action.hopf.unit()}));
}

Subspace CrossedProduct::over(const Subspace& k) const {
  return subspace_tensor(Subspace::full(action.field(), b_dim()), k);
}

CrossedProduct build_crossed_product(MeasuringAction action, Cocycle cocycle) {
  ValidationReport r = validate_measuring(action);
  if (!r.passed()) throw ValidationFailure("measuring action: " + r.summary());
  r = validate_cocycle(action, cocycle);
  if (!r.passed()) throw ValidationFailure("cocycle: " + r.summary());
  const std::size_t m = action.b_dim(), n = action.h_dim();
  const FieldSpec& f = action.field();
  AlgebraStructure alg{f, m * n, crossed_multiplication(action, cocycle.sigma), tensor(action.b_algebra.unit, action.hopf.unit())};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t p = 0; p < n; ++p) {
      std::string bn = i < action.b_names.size() ? action.b_names[i] : "b" + std::to_string(i);
      std::string hn = p < action.hopf.basis_names.size() ? action.hopf.basis_names[p] : "h" + std::to_string(p);
      names.push_back(bn + "#" + hn);
    }
  ComoduleAlgebra a{std::move(alg), action.hopf, kron(Matrix::identity(f, m), action.hopf.coalgebra.comul), std::move(names)};
  r = validate_comodule_algebra(a);
  if (!r.passed()) throw ValidationFailure("crossed product: " + r.summary());
  CrossedProduct cp{std::move(action), std::move(cocycle), std::move(a)};
  if (!(coinvariants(cp.algebra) == cp.base())) throw Error("internal: coinvariants of a crossed product differ from B # 1");
  return cp;
}

CleavingMap cleaving_map(const CrossedProduct& cp) {
  const std::size_t n = cp.h_dim();
  const FieldSpec& f = cp.action.field();
  Matrix gamma(f, cp.algebra.dim(), n);
  for (std::size_t p = 0; p < n; ++p) gamma.set_column(p, tensor(cp.action.b_algebra.unit, basis_vector(f, n, p)));
  if (!(cp.algebra.coaction * gamma == kron(gamma, Matrix::identity(f, n)) * cp.action.hopf.coalgebra.comul))
    throw Error("internal: cleaving map is not H-colinear");
  Matrix inv = convolution_invert(gamma, cp.action.hopf.coalgebra, cp.algebra.algebra);
  return CleavingMap{std::move(gamma), std::move(inv)};
}

LeftCoidealSubalgebra omega(const CrossedProduct& cp, const Subspace& sub) {
  if (!is_unital_subalgebra(cp.algebra.algebra, sub) || !sub.contains(cp.base()))
    throw ValidationFailure("omega: not a subalgebra containing B # 1");
  return generated_left_coideal_subalgebra(cp.action.hopf, right_legs(sub, cp.b_dim()));
}

GeneralizedQuotient psi_crossed(const CrossedProduct& cp, const Subspace& sub) {
  const HopfAlgebraStructure& h = cp.action.hopf;
  return generalized_quotient(h, ideal_from_subalgebra(h, omega(cp, sub).space));
}

GeneralizedQuotient psi(const CrossedProduct& cp, const Subspace& sub, PsiStrategy strategy, std::uint64_t cap) {
  if (strategy == PsiStrategy::Crossed) return psi_crossed(cp, sub);
  return psi(cp.algebra, sub, strategy, cap);
}

CrossedClosedness crossed_closedness(const CrossedProduct& cp, const GeneralizedQuotient& q) {
  CrossedClosedness out;
  Subspace fixed = phi(cp.algebra, q);
  ComoduleAlgebra reg = regular_comodule_algebra(cp.action.hopf);
  out.splitting = fixed == cp.over(phi(reg, q));
  out.closed = psi_crossed(cp, fixed) == q;
  out.galois = is_galois(cp.algebra, q);
  return out;
}

Matrix alpha_map(const CrossedProduct& cp, const Subspace& sub) {
  const std::size_t m = cp.b_dim(), n = cp.h_dim(), d = m * n;
  const FieldSpec& f = cp.action.field();
  ComoduleAlgebra reg = regular_comodule_algebra(cp.action.hopf);
  Subspace k = phi(reg, psi_crossed(cp, sub));
  Subspace target = subspace_tensor(cp.over(k), Subspace::full(f, n));
  BalancedTensor bt = balanced_tensor(cp.algebra.algebra, sub, cp.base());
  const Vector one_h = cp.action.hopf.unit();
  auto apply = [&](std::span<const Scalar> t) {
    Vector out = zero_vector(f, d * n);
    for (const auto& term : tensor_terms(t, d)) {
      std::size_t bi = term.right / n, hi = term.right % n;
      Vector prod = cp.algebra.algebra.product(basis_vector(f, d, term.left), tensor(basis_vector(f, m, bi), one_h));
      axpy(out, term.coeff, tensor(prod, basis_vector(f, n, hi)));
    }
    return out;
  };
  for (std::size_t r = 0; r < bt.relations.dim(); ++r)
    if (!is_zero(apply(bt.relations.basis_vector(r)))) throw WellDefinednessViolation("alpha: relations not killed");
  Matrix out(f, target.dim(), bt.dim());
  for (std::size_t j = 0; j < bt.dim(); ++j) {
    Vector v = apply(bt.lift.column(j));
    if (!target.contains(v)) throw WellDefinednessViolation("alpha: image escapes (B # K) (x) H");
    out.set_column(j, target.coordinates(v));
  }
  return out;
}

Matrix gamma_map(const CrossedProduct& cp, const Subspace& k) {
  const std::size_t m = cp.b_dim(), n = cp.h_dim(), d = m * n;
  const FieldSpec& f = cp.action.field();
  const HopfAlgebraStructure& h = cp.action.hopf;
  if (!is_left_coideal(h, k)) throw ValidationFailure("gamma: K is not a left coideal");
  Subspace space = subspace_tensor(cp.over(k), Subspace::full(f, n));
  Matrix out(f, space.dim(), space.dim());
  for (std::size_t j = 0; j < space.dim(); ++j) {
    Vector v = zero_vector(f, d * n);
    for (const auto& t : tensor_terms(space.basis_vector(j), n)) {
      std::size_t bi = t.left / n, ki = t.left % n, hi = t.right;
      for (const auto& ks : coproduct_terms(h.coalgebra, ki))
        for (const auto& hs : coproduct_terms(h.coalgebra, hi)) {
          Vector a = cp.action.b_algebra.product(basis_vector(f, m, bi), sigma_of(cp.cocycle.sigma, n, ks.left, hs.left));
          axpy(v, t.coeff * ks.coeff * hs.coeff, tensor(tensor(a, basis_vector(f, n, ks.right)), basis_vector(f, n, hs.right)));
        }
    }
    out.set_column(j, space.coordinates(v));
  }
  return out;
}

}  // namespace hgw
