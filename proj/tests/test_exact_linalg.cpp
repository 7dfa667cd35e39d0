#include <functional>
#include <set>

#include "doctest.h"
#include "hgw/errors.hpp"
#include "hgw/subspace.hpp"

using namespace hgw;

namespace {

// Point set of a span over GF(p), computed by brute force over all
// coefficient tuples. Points are encoded base p.
std::set<std::uint64_t> brute_span(const std::vector<std::vector<std::uint64_t>>& gens, std::uint64_t p,
                                   std::size_t n) {
  std::set<std::uint64_t> points;
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) combos *= p;
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::vector<std::uint64_t> v(n, 0);
    std::uint64_t t = c;
    for (const auto& g : gens) {
      std::uint64_t coeff = t % p;
      t /= p;
      for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + coeff * g[j]) % p;
    }
    std::uint64_t code = 0;
    for (std::size_t j = 0; j < n; ++j) code = code * p + v[j];
    points.insert(code);
  }
  return points;
}

std::vector<std::uint64_t> decode(std::uint64_t code, std::uint64_t p, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (std::size_t j = n; j-- > 0;) {
    v[j] = code % p;
    code /= p;
  }
  return v;
}

// Every subspace of GF(p)^n as a point set: spans of all tuples of at most n vectors.
std::set<std::set<std::uint64_t>> brute_subspaces(std::uint64_t p, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::set<std::set<std::uint64_t>> out;
  out.insert(brute_span({}, p, n));
  std::vector<std::vector<std::uint64_t>> gens;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t start) {
    if (gens.size() == n) return;
    for (std::uint64_t c = start; c < total; ++c) {
      gens.push_back(decode(c, p, n));
      out.insert(brute_span(gens, p, n));
      rec(c + 1);
      gens.pop_back();
    }
  };
  rec(1);
  return out;
}

std::set<std::uint64_t> points_of(const Subspace& s, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> gens;
  for (const auto& v : s.basis_vectors()) {
    std::vector<std::uint64_t> g;
    for (const auto& x : v) g.push_back(static_cast<std::uint64_t>(x.residue().value));
    gens.push_back(g);
  }
  return brute_span(gens, p, s.ambient());
}

}  // namespace

TEST_CASE("field arithmetic") {
  auto f = FieldSpec::prime(5);
  CHECK((f.from_int(3) * f.from_int(2)) == f.one());
  CHECK(f.from_int(-1).to_string() == "4");
  CHECK(f.from_int(2).inverse() == f.from_int(3));
  CHECK_THROWS_AS(f.parse("1/2"), ParseError);
  CHECK(f.parse("7") == f.from_int(2));
  auto q = FieldSpec::rationals();
  CHECK((q.parse("1/2") + q.parse("1/3")).to_string() == "5/6");
  CHECK(q.parse("-4/6").to_string() == "-2/3");
  CHECK_THROWS_AS(f.zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS(f.one() + FieldSpec::prime(3).one(), FieldMismatch);
  CHECK_THROWS_AS(f.one() + q.one(), FieldMismatch);
  CHECK_THROWS_AS(FieldSpec::prime(4), UnsupportedField);
  CHECK_THROWS_AS(q.parse("1/0"), ParseError);
}

TEST_CASE("rref over GF(5)") {
  auto f = FieldSpec::prime(5);
  Matrix m = Matrix::from_ints(f, {{2, 4}, {1, 2}});
  CHECK(rref(m) == Matrix::from_ints(f, {{1, 2}, {0, 0}}));
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel, sum, intersection, preimage") {
  auto f = FieldSpec::prime(3);
  CHECK(kernel(Matrix::from_ints(f, {{1, 1}})) == Subspace::span(f, 2, {{f.one(), f.from_int(2)}}));
  auto e1 = Subspace::span(f, 2, {basis_vector(f, 2, 0)});
  auto e2 = Subspace::span(f, 2, {basis_vector(f, 2, 1)});
  CHECK(sum(e1, e2) == Subspace::full(f, 2));
  auto diag = Subspace::span(f, 3, {{f.one(), f.one(), f.zero()}});
  auto plane = Subspace::span(f, 3, {{f.one(), f.one(), f.zero()}, {f.zero(), f.zero(), f.one()}});
  auto other = Subspace::span(f, 3, {{f.one(), f.one(), f.zero()}, {f.one(), f.zero(), f.zero()}});
  CHECK(intersect(plane, other) == diag);
  // f = projection to the first coordinate; preimage of 0 is span{e2}
  CHECK(preimage(Matrix::from_ints(f, {{1, 0}}), Subspace::zero(f, 1)) == e2);
}

TEST_CASE("matrix inverse and solve") {
  auto q = FieldSpec::rationals();
  Matrix a = Matrix::from_ints(q, {{2, 1}, {1, 1}});
  CHECK(a * inverse(a) == Matrix::identity(q, 2));
  CHECK_THROWS_AS(inverse(Matrix::from_ints(q, {{1, 2}, {2, 4}})), NotInvertible);
  auto x = solve(a, std::vector<Scalar>{q.from_int(3), q.from_int(2)});
  REQUIRE(x);
  CHECK(a.apply(*x) == Vector{q.from_int(3), q.from_int(2)});
  CHECK_FALSE(solve(Matrix::from_ints(q, {{1, 1}, {1, 1}}), std::vector<Scalar>{q.one(), q.zero()}));
}

TEST_CASE("kron and flip agree with the tensor flattening") {
  auto q = FieldSpec::rationals();
  Matrix a = Matrix::from_ints(q, {{1, 2}, {3, 4}, {5, 6}});
  Matrix b = Matrix::from_ints(q, {{0, 1}, {7, 0}});
  Vector u{q.from_int(1), q.from_int(-2)}, v{q.from_int(3), q.from_int(5)};
  CHECK(kron(a, b).apply(tensor(u, v)) == tensor(a.apply(u), b.apply(v)));
  Vector w{q.from_int(4), q.from_int(1), q.from_int(9)};
  CHECK(flip(q, 2, 3).apply(tensor(u, w)) == tensor(w, u));
}

TEST_CASE("enumeration matches a brute-force oracle") {
  for (std::uint64_t p : {2u, 3u}) {
    auto f = FieldSpec::prime(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto all = enumerate_subspaces(n, f);
      std::set<std::set<std::uint64_t>> seen;
      for (const auto& s : all) seen.insert(points_of(s, p));
      CHECK(seen.size() == all.size());
      CHECK(seen == brute_subspaces(p, n));
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(canonical_less(all[i - 1], all[i]));
    }
  }
  CHECK(enumerate_subspaces(1, FieldSpec::prime(3)).size() == 2);
  CHECK(enumerate_subspaces(2, FieldSpec::prime(2)).size() == 5);
  CHECK(enumerate_subspaces(2, FieldSpec::prime(3)).size() == 6);
  CHECK(enumerate_subspaces(4, FieldSpec::prime(2)).size() == 67);
  CHECK(enumerate_subspaces(4, FieldSpec::prime(3), 2).size() == 130);
  CHECK_THROWS_AS(enumerate_subspaces(2, FieldSpec::rationals()), UnsupportedField);
  CHECK_THROWS_AS(enumerate_subspaces(8, FieldSpec::prime(5)), CapExceeded);
}

TEST_CASE("lattice identities over GF(3)^3") {
  auto f = FieldSpec::prime(3);
  auto all = enumerate_subspaces(3, f);
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (std::size_t j = 0; j < all.size(); j += 5) {
      const auto &a = all[i], &b = all[j];
      auto s = sum(a, b), m = intersect(a, b);
      CHECK(s.dim() + m.dim() == a.dim() + b.dim());
      CHECK(s.contains(a));
      CHECK(a.contains(m));
      CHECK(intersect(a, s) == a);
      CHECK(annihilator(annihilator(a)) == a);
      auto q = quotient(3, a);
      CHECK(q.projection * q.section == Matrix::identity(f, q.dim()));
      CHECK(kernel(q.projection) == a);
    }
}

TEST_CASE("quotient coordinates") {
  auto f = FieldSpec::prime(3);
  auto q = quotient(2, Subspace::span(f, 2, {{f.one(), f.one()}}));
  CHECK(q.projection == Matrix::from_ints(f, {{-1, 1}}));
}
