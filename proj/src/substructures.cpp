#include "hgw/substructures.hpp"

#include "hgw/errors.hpp"

namespace hgw {

namespace {

Subspace span_of(const FieldSpec& field, std::size_t ambient, const std::vector<Vector>& vs) {
  return Subspace::span(field, ambient, vs);
}

// U (x) H + H (x) U.
Subspace coideal_target(const HopfAlgebraStructure& h, const Subspace& u) {
  const Subspace full = Subspace::full(h.field(), h.dim());
  return sum(subspace_tensor(u, full), subspace_tensor(full, u));
}

bool comul_lands_in(const HopfAlgebraStructure& h, const Subspace& v, const Subspace& target) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!target.contains(h.comul(v.basis_vector(i)))) return false;
  return true;
}

bool counit_kills(const HopfAlgebraStructure& h, const Subspace& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!h.counit(v.basis_vector(i)).is_zero()) return false;
  return true;
}

}  // namespace

Subspace augmentation_ideal(const HopfAlgebraStructure& h) { return kernel(h.coalgebra.counit); }

Subspace plus_part(const HopfAlgebraStructure& h, const Subspace& x) { return intersect(x, augmentation_ideal(h)); }

bool is_right_ideal(const HopfAlgebraStructure& h, const Subspace& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t b = 0; b < h.dim(); ++b)
      if (!v.contains(h.mul(v.basis_vector(i), h.basis(b)))) return false;
  return true;
}

bool is_left_ideal(const HopfAlgebraStructure& h, const Subspace& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t b = 0; b < h.dim(); ++b)
      if (!v.contains(h.mul(h.basis(b), v.basis_vector(i)))) return false;
  return true;
}

bool is_coideal(const HopfAlgebraStructure& h, const Subspace& v) {
  return counit_kills(h, v) && comul_lands_in(h, v, coideal_target(h, v));
}

bool is_left_coideal(const HopfAlgebraStructure& h, const Subspace& v) {
  return comul_lands_in(h, v, subspace_tensor(Subspace::full(h.field(), h.dim()), v));
}

bool is_right_coideal(const HopfAlgebraStructure& h, const Subspace& v) {
  return comul_lands_in(h, v, subspace_tensor(v, Subspace::full(h.field(), h.dim())));
}

bool is_unital_subalgebra(const AlgebraStructure& a, const Subspace& v) {
  if (!v.contains(a.unit)) return false;
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j)
      if (!v.contains(a.product(v.basis_vector(i), v.basis_vector(j)))) return false;
  return true;
}

bool is_generalized_ideal(const HopfAlgebraStructure& h, const Subspace& v) {
  if (v.ambient() != h.dim()) throw DimensionMismatch("generalized ideal ambient");
  return counit_kills(h, v) && is_right_ideal(h, v) && comul_lands_in(h, v, coideal_target(h, v));
}

bool is_left_coideal_subalgebra(const HopfAlgebraStructure& h, const Subspace& v) {
  if (v.ambient() != h.dim()) throw DimensionMismatch("left coideal subalgebra ambient");
  return is_unital_subalgebra(h.algebra, v) && is_left_coideal(h, v);
}

bool is_right_coideal_subalgebra(const HopfAlgebraStructure& h, const Subspace& v) {
  if (v.ambient() != h.dim()) throw DimensionMismatch("right coideal subalgebra ambient");
  return is_unital_subalgebra(h.algebra, v) && is_right_coideal(h, v);
}

bool is_hopf_ideal(const HopfAlgebraStructure& h, const Subspace& v) {
  return is_generalized_ideal(h, v) && is_left_ideal(h, v) && v.contains(image(h.antipode, v));
}

GeneralizedIdeal make_generalized_ideal(const HopfAlgebraStructure& h, const Subspace& v) {
  if (!is_generalized_ideal(h, v)) throw ValidationFailure("not a right ideal coideal");
  return GeneralizedIdeal{v};
}

LeftCoidealSubalgebra make_left_coideal_subalgebra(const HopfAlgebraStructure& h, const Subspace& v) {
  if (!is_left_coideal_subalgebra(h, v)) throw ValidationFailure("not a left coideal subalgebra");
  return LeftCoidealSubalgebra{v};
}

GeneralizedQuotient generalized_quotient(const HopfAlgebraStructure& h, const GeneralizedIdeal& i) {
  if (!is_generalized_ideal(h, i.space)) throw ValidationFailure("generalized quotient of a non-ideal");
  const std::size_t n = h.dim();
  QuotientSpace q = quotient(n, i.space);
  const Matrix& pi = q.projection;
  Matrix comul = kron(pi, pi) * h.coalgebra.comul * q.section;
  Matrix counit = h.coalgebra.counit * q.section;
  Matrix action(h.field(), q.dim(), q.dim() * n);
  for (std::size_t c = 0; c < q.dim(); ++c) {
    Vector lift = q.section.column(c);
    for (std::size_t b = 0; b < n; ++b) action.set_column(c * n + b, pi.apply(h.mul(lift, h.basis(b))));
  }
  return GeneralizedQuotient{i, std::move(q), std::move(comul), std::move(counit), std::move(action)};
}

GeneralizedQuotient identity_quotient(const HopfAlgebraStructure& h) {
  return generalized_quotient(h, GeneralizedIdeal{Subspace::zero(h.field(), h.dim())});
}

GeneralizedQuotient trivial_quotient(const HopfAlgebraStructure& h) {
  return generalized_quotient(h, GeneralizedIdeal{augmentation_ideal(h)});
}

GeneralizedIdeal largest_generalized_ideal_inside(const HopfAlgebraStructure& h, const Subspace& w) {
  Subspace u = intersect(w, augmentation_ideal(h));
  for (std::size_t step = 0; step <= h.dim(); ++step) {
    std::vector<Subspace> conditions{u, preimage(h.coalgebra.comul, coideal_target(h, u))};
    for (std::size_t b = 0; b < h.dim(); ++b)
      conditions.push_back(preimage(h.algebra.right_multiplication(h.basis(b)), u));
    Subspace next = intersect(conditions);
    if (next == u) return make_generalized_ideal(h, u);
    u = std::move(next);
  }
  throw Error("largest_generalized_ideal_inside did not stabilize");
}

GeneralizedIdeal meet_generalized_ideals(const HopfAlgebraStructure& h, std::span<const GeneralizedIdeal> ideals) {
  if (ideals.empty()) throw DimensionMismatch("meet of empty family");
  std::vector<Subspace> spaces;
  for (const auto& i : ideals) spaces.push_back(i.space);
  return largest_generalized_ideal_inside(h, intersect(spaces));
}

GeneralizedIdeal join_generalized_ideals(const HopfAlgebraStructure& h, std::span<const GeneralizedIdeal> ideals) {
  if (ideals.empty()) throw DimensionMismatch("join of empty family");
  std::vector<Subspace> spaces;
  for (const auto& i : ideals) spaces.push_back(i.space);
  Subspace s = sum(spaces);
  if (!is_generalized_ideal(h, s)) throw Error("internal: sum of generalized ideals is not one");
  return GeneralizedIdeal{s};
}

Subspace right_legs(const Subspace& y, std::size_t m) {
  const std::size_t n = y.ambient() / m;
  std::vector<Vector> legs;
  for (std::size_t i = 0; i < y.dim(); ++i) {
    auto v = y.basis_vector(i);
    for (std::size_t a = 0; a < m; ++a) legs.emplace_back(v.begin() + a * n, v.begin() + (a + 1) * n);
  }
  return span_of(y.field(), n, legs);
}

Subspace left_legs(const Subspace& y, std::size_t m) {
  const std::size_t n = y.ambient() / m;
  std::vector<Vector> legs;
  for (std::size_t i = 0; i < y.dim(); ++i) {
    auto v = y.basis_vector(i);
    for (std::size_t b = 0; b < n; ++b) {
      Vector leg(m);
      for (std::size_t a = 0; a < m; ++a) leg[a] = v[a * n + b];
      legs.push_back(std::move(leg));
    }
  }
  return span_of(y.field(), m, legs);
}

Subspace smallest_left_coideal_containing(const HopfAlgebraStructure& h, const Subspace& y) {
  Subspace cur = y;
  for (std::size_t step = 0; step <= h.dim(); ++step) {
    Subspace next = sum(cur, right_legs(image(h.coalgebra.comul, cur), h.dim()));
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw Error("smallest_left_coideal_containing did not stabilize");
}

Subspace generated_subalgebra(const AlgebraStructure& a, const Subspace& y) {
  Subspace cur = sum(y, Subspace::span(a.field, a.dim, {a.unit}));
  for (std::size_t step = 0; step <= a.dim; ++step) {
    std::vector<Vector> products = cur.basis_vectors();
    for (std::size_t i = 0; i < cur.dim(); ++i)
      for (std::size_t j = 0; j < cur.dim(); ++j) products.push_back(a.product(cur.basis_vector(i), cur.basis_vector(j)));
    Subspace next = Subspace::span(a.field, a.dim, products);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw Error("generated_subalgebra did not stabilize");
}

LeftCoidealSubalgebra generated_left_coideal_subalgebra(const HopfAlgebraStructure& h, const Subspace& y) {
  Subspace cur = y;
  for (std::size_t step = 0; step <= h.dim() + 1; ++step) {
    Subspace next = smallest_left_coideal_containing(h, generated_subalgebra(h.algebra, cur));
    if (next == cur) return make_left_coideal_subalgebra(h, cur);
    cur = std::move(next);
  }
  throw Error("generated_left_coideal_subalgebra did not stabilize");
}

GeneralizedIdeal ideal_from_subalgebra(const HopfAlgebraStructure& h, const Subspace& k) {
  Subspace kp = plus_part(h, k);
  std::vector<Vector> products;
  for (std::size_t i = 0; i < kp.dim(); ++i)
    for (std::size_t b = 0; b < h.dim(); ++b) products.push_back(h.mul(kp.basis_vector(i), h.basis(b)));
  return make_generalized_ideal(h, Subspace::span(h.field(), h.dim(), products));
}

GeneralizedIdeal opposite_ideal(const HopfAlgebraStructure& h, const GeneralizedIdeal& i) {
  HopfAlgebraStructure op = opposite(h);
  return make_generalized_ideal(op, image(h.antipode, i.space));
}

std::vector<GeneralizedIdeal> enumerate_generalized_ideals(const HopfAlgebraStructure& h, std::uint64_t cap) {
  std::vector<GeneralizedIdeal> out;
  for (auto& s : enumerate_subspaces(h.dim(), h.field(), std::nullopt, cap))
    if (is_generalized_ideal(h, s)) out.push_back(GeneralizedIdeal{std::move(s)});
  return out;
}

std::vector<LeftCoidealSubalgebra> enumerate_left_coideal_subalgebras(const HopfAlgebraStructure& h,
                                                                      std::uint64_t cap) {
  std::vector<LeftCoidealSubalgebra> out;
  for (auto& s : enumerate_subspaces(h.dim(), h.field(), std::nullopt, cap))
    if (is_left_coideal_subalgebra(h, s)) out.push_back(LeftCoidealSubalgebra{std::move(s)});
  return out;
}

std::vector<Subspace> enumerate_unital_left_coideals(const HopfAlgebraStructure& h, std::uint64_t cap) {
  std::vector<Subspace> out;
  for (auto& s : enumerate_subspaces(h.dim(), h.field(), std::nullopt, cap))
    if (s.contains(h.unit()) && is_left_coideal(h, s)) out.push_back(std::move(s));
  return out;
}

}  // namespace hgw
