#include "hgw/zoo.hpp"

#include <algorithm>
#include <array>

namespace hgw::zoo {

CayleyTable cyclic_group(std::size_t n) {
  CayleyTable t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

CayleyTable symmetric_group_s3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  CayleyTable t(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::array<std::size_t, 3> c{};
      for (std::size_t k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

void check_group(const CayleyTable& t) {
  const std::size_t n = t.size();
  if (n == 0) throw ValidationFailure("empty group table");
  for (const auto& row : t) {
    if (row.size() != n) throw ValidationFailure("group table is not square");
    for (auto v : row)
      if (v >= n) throw ValidationFailure("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) throw ValidationFailure("group table is not associative");
  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a) {
    bool identity = true;
    for (std::size_t b = 0; b < n; ++b) identity = identity && t[a][b] == b && t[b][a] == b;
    if (identity) e = a;
  }
  if (e == n) throw ValidationFailure("group table has no identity");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) has_inverse = has_inverse || (t[a][b] == e && t[b][a] == e);
    if (!has_inverse) throw ValidationFailure("group element without inverse");
  }
}

namespace {

std::size_t identity_of(const CayleyTable& t) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < t.size(); ++b) ok = ok && t[a][b] == b;
    if (ok) return a;
  }
  return 0;
}

void ensure_valid(const HopfAlgebraStructure& h, const std::string& what) {
  auto report = validate_hopf(h);
  if (!report.passed()) throw ValidationFailure(what + ": " + report.summary());
}

}  // namespace

HopfAlgebraStructure group_algebra(const FieldSpec& field, const CayleyTable& table, std::vector<std::string> names) {
  check_group(table);
  const std::size_t n = table.size();
  const std::size_t e = identity_of(table);
  Matrix mul(field, n, n * n), comul(field, n * n, n), counit(field, 1, n), antipode(field, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      mul(table[a][b], a * n + b) = field.one();
      if (table[a][b] == e) antipode(b, a) = field.one();
    }
    comul(a * n + a, a) = field.one();
    counit(0, a) = field.one();
  }
  if (names.empty())
    for (std::size_t a = 0; a < n; ++a) names.push_back("g" + std::to_string(a));
  HopfAlgebraStructure h{AlgebraStructure{field, n, std::move(mul), basis_vector(field, n, e)},
                         CoalgebraStructure{field, n, std::move(comul), std::move(counit)}, std::move(antipode),
                         std::move(names)};
  ensure_valid(h, "group algebra");
  return h;
}

HopfAlgebraStructure dual_group_algebra(const FieldSpec& field, const CayleyTable& table, std::vector<std::string> names) {
  HopfAlgebraStructure h = dual(group_algebra(field, table, std::move(names)));
  ensure_valid(h, "dual group algebra");
  return h;
}

HopfAlgebraStructure sweedler(const FieldSpec& field) {
  if (field.characteristic() == 2) throw UnsupportedField("Sweedler algebra needs characteristic != 2");
  enum { one, g, x, gx };
  const std::size_t n = 4;
  const Scalar p1 = field.one(), m1 = -field.one();
  Matrix mul(field, n, n * n);
  auto set = [&](std::size_t a, std::size_t b, std::size_t to, const Scalar& c) { mul(to, a * n + b) = c; };
  for (std::size_t b = 0; b < n; ++b) set(one, b, b, p1);
  set(g, one, g, p1);
  set(g, g, one, p1);
  set(g, x, gx, p1);
  set(g, gx, x, p1);
  set(x, one, x, p1);
  set(x, g, gx, m1);  // xg = -gx
  set(gx, one, gx, p1);
  set(gx, g, x, m1);  // gxg = -x
  Matrix comul(field, n * n, n);
  comul(one * n + one, one) = p1;
  comul(g * n + g, g) = p1;
  comul(x * n + one, x) = p1;
  comul(g * n + x, x) = p1;
  comul(gx * n + g, gx) = p1;
  comul(one * n + gx, gx) = p1;
  Matrix counit(field, 1, n);
  counit(0, one) = p1;
  counit(0, g) = p1;
  Matrix antipode(field, n, n);
  antipode(one, one) = p1;
  antipode(g, g) = p1;
  antipode(gx, x) = m1;  // S(x) = -gx
  antipode(x, gx) = p1;  // S(gx) = x
  HopfAlgebraStructure h{AlgebraStructure{field, n, std::move(mul), basis_vector(field, n, one)},
                         CoalgebraStructure{field, n, std::move(comul), std::move(counit)}, std::move(antipode),
                         {"1", "g", "x", "gx"}};
  ensure_valid(h, "sweedler");
  return h;
}

HopfAlgebraStructure taft(const FieldSpec& field, std::size_t n, const Scalar& q) {
  if (n < 2) throw ValidationFailure("taft: n must be at least 2");
  // primitive root check
  Scalar power = field.one();
  for (std::size_t d = 1; d <= n; ++d) {
    power *= q;
    if (power.is_one() && d < n) throw ValidationFailure("taft: q is not a primitive root of unity");
  }
  if (!power.is_one()) throw ValidationFailure("taft: q^n != 1");
  const std::size_t dim = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return j * n + i; };  // g^i x^j
  std::vector<Scalar> qpow{field.one()};
  for (std::size_t k = 1; k < n * n; ++k) qpow.push_back(qpow.back() * q);

  // g^i x^j g^k x^l = q^{jk} g^{i+k} x^{j+l}
  Matrix mul(field, dim, dim * dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (j + l < n) mul(idx((i + k) % n, j + l), idx(i, j) * dim + idx(k, l)) = qpow[(j * k) % n];
  AlgebraStructure alg{field, dim, std::move(mul), basis_vector(field, dim, idx(0, 0))};

  Vector dg = tensor(basis_vector(field, dim, idx(1, 0)), basis_vector(field, dim, idx(1, 0)));
  Vector dx = add(tensor(basis_vector(field, dim, idx(0, 1)), alg.unit),
                  tensor(basis_vector(field, dim, idx(1, 0)), basis_vector(field, dim, idx(0, 1))));
  Vector sg = basis_vector(field, dim, idx(n - 1, 0));
  Vector sx = scale(-field.one(), basis_vector(field, dim, idx(n - 1, 1)));

  Matrix comul(field, dim * dim, dim), counit(field, 1, dim), antipode(field, dim, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector d = tensor(alg.unit, alg.unit);
      Vector s = alg.unit;
      for (std::size_t a = 0; a < i; ++a) d = tensor_square_product(alg, d, dg);
      for (std::size_t b = 0; b < j; ++b) d = tensor_square_product(alg, d, dx);
      // S is an anti-homomorphism: S(g^i x^j) = S(x)^j S(g)^i
      for (std::size_t b = 0; b < j; ++b) s = alg.product(s, sx);
      for (std::size_t a = 0; a < i; ++a) s = alg.product(s, sg);
      comul.set_column(idx(i, j), d);
      antipode.set_column(idx(i, j), s);
      if (j == 0) counit(0, idx(i, j)) = field.one();
    }
  std::vector<std::string> names;
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t i = k % n, j = k / n;
    std::string name;
    if (i > 0) name += i == 1 ? "g" : "g^" + std::to_string(i);
    if (j > 0) name += j == 1 ? "x" : "x^" + std::to_string(j);
    names.push_back(name.empty() ? "1" : name);
  }
  HopfAlgebraStructure h{std::move(alg), CoalgebraStructure{field, dim, std::move(comul), std::move(counit)},
                         std::move(antipode), std::move(names)};
  ensure_valid(h, "taft");
  return h;
}

bool is_commutative(const AlgebraStructure& a) { return a.mul == a.mul * flip(a.field, a.dim, a.dim); }

bool is_cocommutative(const CoalgebraStructure& c) { return c.comul == flip(c.field, c.dim, c.dim) * c.comul; }

std::vector<ZooEntry> hopf_zoo() {
  const FieldSpec gf2 = FieldSpec::prime(2), gf3 = FieldSpec::prime(3), gf5 = FieldSpec::prime(5),
                  gf13 = FieldSpec::prime(13), q = FieldSpec::rationals();
  const std::vector<std::string> c2{"1", "g"}, c4{"1", "g", "g^2", "g^3"};
  std::vector<ZooEntry> z;
  z.push_back({"kC2-GF2", group_algebra(gf2, cyclic_group(2), c2), {2, true, true, 1, 2, 2}});
  z.push_back({"kC2-GF3", group_algebra(gf3, cyclic_group(2), c2), {2, true, true, 1, 2, 2}});
  z.push_back({"kC2-GF5", group_algebra(gf5, cyclic_group(2), c2), {2, true, true, 1, 2, 2}});
  z.push_back({"kC4-GF5", group_algebra(gf5, cyclic_group(4), c4), {4, true, true, 2, 3, 3}});
  z.push_back({"kS3-GF2", group_algebra(gf2, symmetric_group_s3()), {6, false, true, 2, 6, 6}});
  z.push_back({"dual-kC2-GF2", dual_group_algebra(gf2, cyclic_group(2), c2), {2, true, true, 1, 2, 2}});
  z.push_back({"dual-kC2-GF3", dual_group_algebra(gf3, cyclic_group(2), c2), {2, true, true, 1, 2, 2}});
  z.push_back({"dual-kC4-GF5", dual_group_algebra(gf5, cyclic_group(4), c4), {4, true, true, 2, 3, 3}});
  z.push_back({"dual-kS3-GF2", dual_group_algebra(gf2, symmetric_group_s3()), {6, true, false, 2, 6, 6}});
  z.push_back({"H4-GF3", sweedler(gf3), {4, false, false, 4, 6, 6}});
  z.push_back({"H4-Q", sweedler(q), {4, false, false, 4, -1, -1}});
  z.push_back({"taft3-GF13", taft(gf13, 3, gf13.from_int(3)), {9, false, false, 6, -1, -1}});
  z.push_back({"taft4-GF5", taft(gf5, 4, gf5.from_int(2)), {16, false, false, 8, -1, -1}});
  return z;
}

const ZooEntry& find(const std::vector<ZooEntry>& zoo, const std::string& name) {
  for (const auto& e : zoo)
    if (e.name == name) return e;
  throw Error("unknown zoo entry: " + name);
}

}  // namespace hgw::zoo

namespace hgw::zoo {

AlgebraStructure product_algebra(const FieldSpec& field, std::size_t n) {
  Matrix mul(field, n, n * n);
  Vector unit(n, field.one());
  for (std::size_t i = 0; i < n; ++i) mul(i, i * n + i) = field.one();
  return AlgebraStructure{field, n, std::move(mul), std::move(unit)};
}

AlgebraStructure matrix_algebra(const FieldSpec& field, std::size_t n) {
  const std::size_t d = n * n;
  Matrix mul(field, d, d * d);
  Vector unit = zero_vector(field, d);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = field.one();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mul(i * n + k, (i * n + j) * d + (j * n + k)) = field.one();
  }
  return AlgebraStructure{field, d, std::move(mul), std::move(unit)};
}

namespace {

const FieldSpec& gf3() {
  static const FieldSpec f = FieldSpec::prime(3);
  return f;
}

HopfAlgebraStructure c2_gf3() { return group_algebra(gf3(), cyclic_group(2), {"1", "g"}); }

CrossedProduct with_trivial_cocycle(MeasuringAction act) {
  Matrix sigma = trivial_sigma(act);
  Cocycle c = make_cocycle(act, std::move(sigma));
  return build_crossed_product(std::move(act), std::move(c));
}

}  // namespace

CrossedProduct trivial_smash() {
  return with_trivial_cocycle(trivial_action(product_algebra(gf3(), 2), c2_gf3(), {"e1", "e2"}));
}

CrossedProduct swap_crossed_product() {
  MeasuringAction act = trivial_action(product_algebra(gf3(), 2), c2_gf3(), {"e1", "e2"});
  // column g * 2 + b holds g . e_b
  act.action(0, 2) = gf3().zero();
  act.action(1, 2) = gf3().one();
  act.action(0, 3) = gf3().one();
  act.action(1, 3) = gf3().zero();
  return with_trivial_cocycle(std::move(act));
}

CrossedProduct twisted_group_algebra() {
  const FieldSpec& f = gf3();
  AlgebraStructure k{f, 1, Matrix::identity(f, 1), {f.one()}};
  MeasuringAction act = trivial_action(k, c2_gf3(), {"1"});
  Matrix sigma = trivial_sigma(act);
  sigma(0, 1 * 2 + 1) = f.from_int(-1);
  Cocycle c = make_cocycle(act, std::move(sigma));
  return build_crossed_product(std::move(act), std::move(c));
}

CrossedProduct trivial_over_sweedler() {
  const FieldSpec& f = gf3();
  AlgebraStructure k{f, 1, Matrix::identity(f, 1), {f.one()}};
  return with_trivial_cocycle(trivial_action(k, sweedler(f), {"1"}));
}

CrossedProduct matrix_smash() {
  return with_trivial_cocycle(trivial_action(matrix_algebra(gf3(), 2), c2_gf3(), {"E11", "E12", "E21", "E22"}));
}

std::vector<StandardExtension> standard_extensions() {
  std::vector<StandardExtension> out;
  for (auto& e : hopf_zoo()) out.push_back({"regular-" + e.name, regular_comodule_algebra(e.hopf), std::nullopt});
  auto add = [&](std::string name, CrossedProduct cp) {
    ComoduleAlgebra a = cp.algebra;
    out.push_back({std::move(name), std::move(a), std::move(cp)});
  };
  add("smash-GF3sq-kC2", trivial_smash());
  add("swap-GF3sq-kC2", swap_crossed_product());
  add("twisted-kC2-GF3", twisted_group_algebra());
  add("k-smash-H4-GF3", trivial_over_sweedler());
  add("M2-smash-kC2-GF3", matrix_smash());
  return out;
}

}  // namespace hgw::zoo
