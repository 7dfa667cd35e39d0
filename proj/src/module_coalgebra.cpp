#include "hgw/module_coalgebra.hpp"

#include <algorithm>

#include "hgw/comodule_algebra.hpp"
#include "hgw/errors.hpp"

namespace hgw {

namespace {

void check(ValidationReport& report, const char* axiom, std::vector<std::size_t> witness, Vector lhs, Vector rhs) {
  if (lhs != rhs) report.violations.push_back({axiom, std::move(witness), std::move(lhs), std::move(rhs)});
}

Vector act_basis(const ModuleCoalgebra& c, std::size_t h, std::size_t j) { return c.action.column(h * c.dim() + j); }

Matrix quotient_right_coaction(const CoalgebraStructure& c, const Matrix& pi) {
  Matrix out(c.field, c.dim * pi.rows(), c.dim);
  for (std::size_t i = 0; i < c.dim; ++i) out.set_column(i, apply_right(pi, c.comul.column(i), c.dim));
  return out;
}

Matrix quotient_left_coaction(const CoalgebraStructure& c, const Matrix& pi) {
  Matrix out(c.field, pi.rows() * c.dim, c.dim);
  for (std::size_t i = 0; i < c.dim; ++i) out.set_column(i, apply_left(pi, c.comul.column(i), c.dim));
  return out;
}

std::string label_of(const Subspace& s) { return s.basis().to_string(); }

}  // namespace

ModuleCoalgebra regular_module_coalgebra(const HopfAlgebraStructure& h) {
  return ModuleCoalgebra{h.coalgebra, h, h.algebra.mul, h.basis_names};
}

ModuleCoalgebra trivial_module_coalgebra(const HopfAlgebraStructure& h) {
  const std::size_t n = h.dim();
  Matrix action(h.field(), n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) action(c, a * n + c) = h.coalgebra.counit(0, a);
  return ModuleCoalgebra{h.coalgebra, h, std::move(action), h.basis_names};
}

ValidationReport validate_module_coalgebra(const ModuleCoalgebra& c) {
  const std::size_t n = c.hopf.dim(), m = c.dim();
  if (!(c.hopf.field() == c.field())) throw FieldMismatch("module coalgebra over a different field");
  if (c.action.rows() != m || c.action.cols() != n * m) throw DimensionMismatch("action dimensions");
  ValidationReport report = validate_coalgebra(c.coalgebra);
  for (std::size_t j = 0; j < m; ++j) {
    check(report, "unit acts trivially", {j}, c.act(c.hopf.unit(), basis_vector(c.field(), m, j)),
          basis_vector(c.field(), m, j));
    for (std::size_t a = 0; a < n; ++a) {
      Vector hc = act_basis(c, a, j);
      for (std::size_t b = 0; b < n; ++b)
        check(report, "action associativity", {a, b, j}, c.act(c.hopf.algebra.basis_product(a, b), basis_vector(c.field(), m, j)),
              c.act(c.hopf.basis(a), act_basis(c, b, j)));
      // Delta_C(h . c) = h_(1) . c_(1) (x) h_(2) . c_(2)
      Vector rhs = zero_vector(c.field(), m * m);
      for (const auto& hs : coproduct_terms(c.hopf.coalgebra, a))
        for (const auto& cs : coproduct_terms(c.coalgebra, j))
          axpy(rhs, hs.coeff * cs.coeff, tensor(act_basis(c, hs.left, cs.left), act_basis(c, hs.right, cs.right)));
      check(report, "action comultiplicative", {a, j}, c.coalgebra.comul.apply(hc), rhs);
      check(report, "action counital", {a, j}, c.coalgebra.counit.apply(hc),
            {c.hopf.coalgebra.counit(0, a) * c.coalgebra.counit(0, j)});
    }
  }
  return report;
}

bool is_coideal(const CoalgebraStructure& c, const Subspace& j) {
  const Subspace full = Subspace::full(c.field, c.dim);
  const Subspace target = sum(subspace_tensor(j, full), subspace_tensor(full, j));
  for (std::size_t i = 0; i < j.dim(); ++i) {
    if (!c.counit.apply(j.basis_vector(i))[0].is_zero()) return false;
    if (!target.contains(c.comul.apply(j.basis_vector(i)))) return false;
  }
  return true;
}

Subspace k_plus_c(const ModuleCoalgebra& c, const Subspace& k) {
  Subspace kp = plus_part(c.hopf, k);
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < kp.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j) vs.push_back(c.act(kp.basis_vector(i), basis_vector(c.field(), c.dim(), j)));
  return Subspace::span(c.field(), c.dim(), vs);
}

namespace {

CoextensionQuotient quotient_by(const ModuleCoalgebra& c, const Subspace& k) {
  Subspace j = k_plus_c(c, k);
  if (!is_coideal(c.coalgebra, j)) throw Error("internal: K^+C is not a coideal");
  QuotientSpace q = quotient(c.dim(), j);
  Matrix comul = kron(q.projection, q.projection) * c.coalgebra.comul * q.section;
  Matrix counit = c.coalgebra.counit * q.section;
  return CoextensionQuotient{k, std::move(q), std::move(comul), std::move(counit)};
}

}  // namespace

CoextensionQuotient invariant_quotient(const ModuleCoalgebra& c, const Subspace& k) {
  if (!k.is_full() && !(k.contains(c.hopf.unit()) && is_left_coideal(c.hopf, k)))
    throw ValidationFailure("invariant_quotient: K must be a left coideal containing 1");
  return quotient_by(c, k);
}

Subspace coext_cotensor(const ModuleCoalgebra& c, const Subspace& k) {
  CoextensionQuotient q = quotient_by(c, k);
  const Matrix& pi = q.quotient.projection;
  return cotensor(quotient_right_coaction(c.coalgebra, pi), quotient_left_coaction(c.coalgebra, pi), q.dim()).space;
}

Matrix can_coext(const ModuleCoalgebra& c, const Subspace& k) {
  if (!is_left_coideal(c.hopf, k)) throw ValidationFailure("can_coext: K is not a left coideal");
  Subspace target = coext_cotensor(c, k);
  Subspace domain = subspace_tensor(k, Subspace::full(c.field(), c.dim()));
  const std::size_t m = c.dim();
  Matrix out(c.field(), target.dim(), domain.dim());
  for (std::size_t d = 0; d < domain.dim(); ++d) {
    Vector v = zero_vector(c.field(), m * m);
    for (const auto& t : tensor_terms(domain.basis_vector(d), m))
      for (const auto& cs : coproduct_terms(c.coalgebra, t.right))
        axpy(v, t.coeff * cs.coeff, tensor(act_basis(c, t.left, cs.left), basis_vector(c.field(), m, cs.right)));
    if (!target.contains(v)) throw Error("can_coext: image escapes the cotensor product");
    out.set_column(d, target.coordinates(v));
  }
  return out;
}

bool is_coext_galois(const ModuleCoalgebra& c, const Subspace& k) {
  Matrix m = can_coext(c, k);
  return m.rows() == m.cols() && rank(m) == m.rows();
}

CoextConnection coext_connection(const ModuleCoalgebra& c, std::uint64_t cap) {
  const FieldSpec& f = c.field();
  std::vector<Subspace> coideals = enumerate_unital_left_coideals(c.hopf, cap);
  // Coideals of C inside H^+C, enumerated through coordinates of H^+C.
  Subspace top = k_plus_c(c, Subspace::full(f, c.hopf.dim()));
  std::vector<Subspace> kernels;
  for (const auto& s : enumerate_subspaces(top.dim(), f, std::nullopt, cap)) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < s.dim(); ++i) vs.push_back(top.basis().transpose().apply(s.basis_vector(i)));
    Subspace j = Subspace::span(f, c.dim(), vs);
    if (is_coideal(c.coalgebra, j)) kernels.push_back(std::move(j));
  }
  std::sort(kernels.begin(), kernels.end(), [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); });

  std::vector<std::string> left_labels, right_labels;
  for (const auto& s : coideals) left_labels.push_back(label_of(s));
  for (const auto& s : kernels) right_labels.push_back(label_of(s));
  FinitePoset left = FinitePoset::from_relation(left_labels, [&](std::size_t a, std::size_t b) {
    return coideals[b].contains(coideals[a]);
  });
  FinitePoset right = FinitePoset::from_relation(right_labels, [&](std::size_t a, std::size_t b) {
    return kernels[a].contains(kernels[b]);
  });

  const Subspace unit_line = Subspace::span(f, c.hopf.dim(), {c.hopf.unit()});
  auto index_of = [](const std::vector<Subspace>& list, const Subspace& s) {
    auto it = std::find(list.begin(), list.end(), s);
    if (it == list.end()) throw Error("internal: connection map leaves the enumerated poset");
    return static_cast<std::size_t>(it - list.begin());
  };
  std::vector<std::size_t> fwd, bwd;
  std::vector<Subspace> images;
  for (const auto& i : coideals) {
    images.push_back(k_plus_c(c, sum(i, unit_line)));
    fwd.push_back(index_of(kernels, images.back()));
  }
  for (const auto& j : kernels) {
    std::vector<Subspace> parts{unit_line};
    for (std::size_t a = 0; a < coideals.size(); ++a)
      if (j.contains(images[a])) parts.push_back(coideals[a]);
    bwd.push_back(index_of(coideals, sum(parts)));
  }
  GaloisConnectionReport report = check_connection(left, right, fwd, bwd);
  return CoextConnection{std::move(coideals), std::move(kernels), std::move(left), std::move(right), std::move(report)};
}

}  // namespace hgw
