#include "hgw/galois_engine.hpp"

#include <algorithm>

#include "hgw/errors.hpp"
#include "hgw/module_coalgebra.hpp"

namespace hgw {

namespace {

Scalar dot(const FieldSpec& f, std::span<const Scalar> a, std::span<const Scalar> b) {
  Scalar s = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t index_in(const std::vector<Subspace>& list, const Subspace& s, const char* what) {
  auto it = std::find(list.begin(), list.end(), s);
  if (it == list.end()) throw Error(std::string("internal: ") + what + " not in the enumerated list");
  return static_cast<std::size_t>(it - list.begin());
}

void require_subalgebra(const ComoduleAlgebra& a, const Subspace& sub) {
  if (sub.ambient() != a.dim()) throw DimensionMismatch("psi: subspace of the wrong ambient dimension");
  if (!is_unital_subalgebra(a.algebra, sub)) throw ValidationFailure("psi: not a unital subalgebra");
}

}  // namespace

const char* to_string(PsiStrategy s) {
  switch (s) {
    case PsiStrategy::Formula: return "formula";
    case PsiStrategy::Enumerate: return "enumerate";
    case PsiStrategy::Crossed: return "crossed";
  }
  return "?";
}

Subspace phi(const ComoduleAlgebra& a, const GeneralizedQuotient& q) { return coinvariants(a, q).space; }

bool is_regular(const ComoduleAlgebra& a) {
  return a.algebra.dim == a.hopf.dim() && a.algebra.mul == a.hopf.algebra.mul && a.algebra.unit == a.hopf.algebra.unit &&
         a.coaction == a.hopf.coalgebra.comul;
}

GeneralizedQuotient psi_over(const ComoduleAlgebra& a, const Subspace& sub, std::span<const GeneralizedIdeal> ideals) {
  std::vector<GeneralizedIdeal> family;
  for (const auto& i : ideals)
    if (coinvariants(a, generalized_quotient(a.hopf, i)).space.contains(sub)) family.push_back(i);
  if (family.empty()) throw Error("internal: no quotient has the subalgebra among its coinvariants");
  return generalized_quotient(a.hopf, meet_generalized_ideals(a.hopf, family));
}

GeneralizedQuotient psi(const ComoduleAlgebra& a, const Subspace& sub, PsiStrategy strategy, std::uint64_t cap) {
  require_subalgebra(a, sub);
  switch (strategy) {
    case PsiStrategy::Formula:
      if (!is_regular(a)) throw UnsupportedStrategy("psi formula: A is not H over itself");
      if (!is_left_coideal_subalgebra(a.hopf, sub))
        throw UnsupportedStrategy("psi formula: not a left coideal subalgebra");
      return generalized_quotient(a.hopf, ideal_from_subalgebra(a.hopf, sub));
    case PsiStrategy::Enumerate: {
      if (!a.field().is_finite()) throw UnsupportedStrategy("psi enumerate: infinite field");
      auto ideals = enumerate_generalized_ideals(a.hopf, cap);
      return psi_over(a, sub, ideals);
    }
    case PsiStrategy::Crossed:
      throw UnsupportedStrategy("psi crossed: needs crossed product data");
  }
  throw UnsupportedStrategy("psi: unknown strategy");
}

bool is_closed_quotient(const ComoduleAlgebra& a, const GeneralizedQuotient& q, PsiStrategy strategy,
                        std::uint64_t cap) {
  return psi(a, phi(a, q), strategy, cap) == q;
}

bool is_closed_subalgebra(const ComoduleAlgebra& a, const Subspace& sub, PsiStrategy strategy, std::uint64_t cap) {
  return phi(a, psi(a, sub, strategy, cap)) == sub;
}

std::vector<Subspace> enumerate_intermediate_subalgebras(const ComoduleAlgebra& a, std::uint64_t cap) {
  Subspace b = coinvariants(a);
  QuotientSpace q = quotient(a.dim(), b);
  std::vector<Subspace> out;
  for (const auto& w : enumerate_subspaces(q.dim(), a.field(), std::nullopt, cap)) {
    Subspace s = sum(b, image(q.section, w));
    if (is_unital_subalgebra(a.algebra, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subspace& x, const Subspace& y) { return canonical_less(x, y); });
  return out;
}

ConnectionReport connection_over(const ComoduleAlgebra& a, std::vector<GeneralizedIdeal> ideals,
                                 std::vector<Subspace> subalgebras) {
  std::vector<Subspace> ideal_spaces;
  std::vector<std::string> qlabels, slabels;
  for (const auto& i : ideals) {
    ideal_spaces.push_back(i.space);
    qlabels.push_back(i.space.basis().to_string());
  }
  for (const auto& s : subalgebras) slabels.push_back(s.basis().to_string());
  FinitePoset qp = FinitePoset::from_relation(qlabels, [&](std::size_t x, std::size_t y) {
    return ideal_spaces[x].contains(ideal_spaces[y]);
  });
  FinitePoset sp = FinitePoset::from_relation(slabels, [&](std::size_t x, std::size_t y) {
    return subalgebras[y].contains(subalgebras[x]);
  });

  std::vector<Subspace> coinv;
  std::vector<std::size_t> fwd, bwd;
  for (const auto& i : ideals) {
    coinv.push_back(phi(a, generalized_quotient(a.hopf, i)));
    fwd.push_back(index_in(subalgebras, coinv.back(), "phi(Q)"));
  }
  for (const auto& s : subalgebras) {
    std::vector<GeneralizedIdeal> family;
    for (std::size_t x = 0; x < ideals.size(); ++x)
      if (coinv[x].contains(s)) family.push_back(ideals[x]);
    if (family.empty()) throw Error("internal: no quotient has the subalgebra among its coinvariants");
    bwd.push_back(index_in(ideal_spaces, meet_generalized_ideals(a.hopf, family).space, "psi(S)"));
  }
  GaloisConnectionReport report = check_connection(qp, sp, fwd, bwd);
  bool triple = true;
  for (std::size_t x = 0; x < fwd.size(); ++x) triple = triple && fwd[bwd[fwd[x]]] == fwd[x];
  for (std::size_t s = 0; s < bwd.size(); ++s) triple = triple && bwd[fwd[bwd[s]]] == bwd[s];
  return ConnectionReport{std::move(ideals), std::move(subalgebras), std::move(qp), std::move(sp), std::move(report), triple};
}

ConnectionReport comodule_connection(const ComoduleAlgebra& a, std::uint64_t cap) {
  return connection_over(a, enumerate_generalized_ideals(a.hopf, cap), enumerate_intermediate_subalgebras(a, cap));
}

DualityCheck duality_check(const HopfAlgebraStructure& h, const Subspace& k) {
  const FieldSpec& f = h.field();
  const std::size_t n = h.dim();
  const HopfAlgebraStructure hd = dual(h);
  ModuleCoalgebra c = regular_module_coalgebra(h);
  DualityCheck out;

  Matrix can = can_coext(c, k);
  Subspace cot = coext_cotensor(c, k);
  Subspace dom = subspace_tensor(k, Subspace::full(f, n));

  // (H / K^+H)^* against the left K*-coinvariants of H*
  Subspace b_dual = annihilator(k_plus_c(c, k));
  QuotientSpace kq = quotient(n, annihilator(k));
  Matrix left(f, kq.dim() * n, n);
  Vector one_q = kq.projection.apply(hd.unit());
  for (std::size_t i = 0; i < n; ++i) {
    Vector col = apply_left(kq.projection, hd.coalgebra.comul.column(i), n);
    for (std::size_t r = 0; r < kq.dim(); ++r) col[r * n + i] -= one_q[r];
    left.set_column(i, col);
  }
  out.coinvariants_match = kernel(left) == b_dual;

  BalancedTensor bt = balanced_tensor(hd.algebra, Subspace::full(f, n), b_dual);
  out.relations_match = bt.relations == annihilator(cot);

  // columns e^a (x) e^b of H* (x) H*, rows the basis of K (x) H
  Matrix lhs = can.transpose() * cot.basis();
  Matrix rhs(f, dom.dim(), n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector v = zero_vector(f, n * n);
      for (const auto& t : coproduct_terms(hd.coalgebra, a))
        axpy(v, t.coeff, tensor(hd.basis(t.left), hd.algebra.basis_product(t.right, b)));
      for (std::size_t j = 0; j < dom.dim(); ++j) rhs(j, a * n + b) = dot(f, dom.basis_vector(j), v);
    }
  out.matrices_match = lhs == rhs;
  out.dual_bijective = rank(rhs) == dom.dim() && bt.dim() == dom.dim();
  return out;
}

TakeuchiReport takeuchi_report(const HopfAlgebraStructure& h, std::uint64_t cap) {
  ComoduleAlgebra a = regular_comodule_algebra(h);
  ModuleCoalgebra c = regular_module_coalgebra(h);
  std::vector<Subspace> subs;
  for (auto& k : enumerate_left_coideal_subalgebras(h, cap)) subs.push_back(std::move(k.space));
  TakeuchiReport r;
  r.connection = connection_over(a, enumerate_generalized_ideals(h, cap), subs);
  const auto& conn = r.connection;
  auto fail = [&](std::string what) { r.failures.push_back(std::move(what)); };

  if (!conn.connection.laws_hold()) fail("connection laws violated");
  if (!conn.triple_composition) fail("triple composition laws violated");
  if (!conn.bijection()) fail("phi and psi are not inverse bijections");

  r.strategies_agree = true;
  for (std::size_t s = 0; s < subs.size(); ++s)
    if (!(psi(a, subs[s], PsiStrategy::Formula).ideal.space == conn.ideals[conn.connection.backward[s]].space)) {
      r.strategies_agree = false;
      fail("psi formula disagrees with enumeration at subalgebra " + std::to_string(s));
    }

  auto is_closed = [](const std::vector<std::size_t>& closed, std::size_t i) {
    return std::find(closed.begin(), closed.end(), i) != closed.end();
  };
  r.closed_quotient_iff_galois = true;
  r.explicit_inverses_exact = true;
  for (std::size_t x = 0; x < conn.ideals.size(); ++x) {
    GeneralizedQuotient q = generalized_quotient(h, conn.ideals[x]);
    r.quotient_galois.push_back(is_galois(a, q));
    if (r.quotient_galois.back() != is_closed(conn.connection.closed_left, x)) {
      r.closed_quotient_iff_galois = false;
      fail("closed(Q) differs from Q-Galois at ideal " + std::to_string(x));
    }
    Matrix m = cocan(h, q), inv = cocan_inverse(h, q);
    if (!(inv * m == Matrix::identity(h.field(), m.cols())) || !(m * inv == Matrix::identity(h.field(), m.rows()))) {
      r.explicit_inverses_exact = false;
      fail("cocan inverse formula fails at ideal " + std::to_string(x));
    }
  }
  r.closed_subalgebra_iff_coext = true;
  for (std::size_t s = 0; s < subs.size(); ++s) {
    r.coext_galois.push_back(is_coext_galois(c, subs[s]));
    if (r.coext_galois.back() != is_closed(conn.connection.closed_right, s)) {
      r.closed_subalgebra_iff_coext = false;
      fail("closed(K) differs from K-Galois coextension at subalgebra " + std::to_string(s));
    }
    GeneralizedQuotient q = generalized_quotient(h, ideal_from_subalgebra(h, subs[s]));
    Matrix m = can_general(a, subs[s], q), inv = can_k_inverse(h, subs[s]);
    if (!(inv * m == Matrix::identity(h.field(), m.cols())) || !(m * inv == Matrix::identity(h.field(), m.rows()))) {
      r.explicit_inverses_exact = false;
      fail("canK inverse formula fails at subalgebra " + std::to_string(s));
    }
    r.duality.push_back(duality_check(h, subs[s]).holds());
    if (!r.duality.back()) fail("duality of canonical maps fails at subalgebra " + std::to_string(s));
  }
  return r;
}

ComoduleAlgebra opposite_comodule_algebra(const ComoduleAlgebra& a) {
  ComoduleAlgebra op = a;
  op.hopf = opposite(a.hopf);
  op.algebra.mul = a.algebra.mul * flip(a.field(), a.dim(), a.dim());
  return op;
}

bool opposite_consistency(const ComoduleAlgebra& a, const GeneralizedQuotient& q) {
  ComoduleAlgebra op = opposite_comodule_algebra(a);
  GeneralizedQuotient qop = generalized_quotient(op.hopf, opposite_ideal(a.hopf, q.ideal));
  return phi(op, qop) == phi(a, q);
}

bool opposite_consistency_psi(const ComoduleAlgebra& a, const Subspace& sub, std::uint64_t cap) {
  ComoduleAlgebra op = opposite_comodule_algebra(a);
  GeneralizedQuotient lhs = psi(op, sub, PsiStrategy::Enumerate, cap);
  GeneralizedQuotient rhs = psi(a, sub, PsiStrategy::Enumerate, cap);
  return lhs.ideal.space == opposite_ideal(a.hopf, rhs.ideal).space;
}

}  // namespace hgw
