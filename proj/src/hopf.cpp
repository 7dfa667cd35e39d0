#include "hgw/hopf.hpp"

#include <sstream>

namespace hgw {

Vector AlgebraStructure::product(std::span<const Scalar> a, std::span<const Scalar> b) const {
  if (a.size() != dim || b.size() != dim) throw DimensionMismatch("algebra product");
  Vector out = zero_vector(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      std::size_t col = i * dim + j;
      for (std::size_t t = 0; t < dim; ++t) {
        const Scalar& m = mul(t, col);
        if (!m.is_zero()) out[t] += c * m;
      }
    }
  }
  return out;
}

Matrix AlgebraStructure::left_multiplication(std::span<const Scalar> v) const {
  Matrix m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.set_column(j, product(v, basis_vector(field, dim, j)));
  return m;
}

Matrix AlgebraStructure::right_multiplication(std::span<const Scalar> v) const {
  Matrix m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.set_column(j, product(basis_vector(field, dim, j), v));
  return m;
}

std::vector<TensorTerm> tensor_terms(std::span<const Scalar> t, std::size_t n) {
  std::vector<TensorTerm> out;
  for (std::size_t idx = 0; idx < t.size(); ++idx)
    if (!t[idx].is_zero()) out.push_back({idx / n, idx % n, t[idx]});
  return out;
}

std::vector<TensorTerm> coproduct_terms(const CoalgebraStructure& c, std::size_t i) {
  return tensor_terms(c.comul.column(i), c.dim);
}

void ValidationReport::merge(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  if (passed()) {
    os << "passed";
    return os.str();
  }
  os << violations.size() << " violation(s)";
  for (const auto& v : violations) {
    os << "\n  " << v.axiom << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << ")";
  }
  return os.str();
}

namespace {

void check(ValidationReport& report, const char* axiom, std::vector<std::size_t> witness, Vector lhs, Vector rhs) {
  if (lhs != rhs) report.violations.push_back({axiom, std::move(witness), std::move(lhs), std::move(rhs)});
}

// Product of two elements of A (x) B given as term lists.
Vector tensor_product(const AlgebraStructure& a, const AlgebraStructure& b, const std::vector<TensorTerm>& x,
                      const std::vector<TensorTerm>& y) {
  const std::size_t m = a.dim, n = b.dim;
  Vector out = zero_vector(a.field, m * n);
  for (const auto& s : x)
    for (const auto& t : y) {
      Vector l = a.basis_product(s.left, t.left);
      Vector r = b.basis_product(s.right, t.right);
      Scalar c = s.coeff * t.coeff;
      for (std::size_t i = 0; i < m; ++i) {
        if (l[i].is_zero()) continue;
        Scalar ci = c * l[i];
        for (std::size_t j = 0; j < n; ++j)
          if (!r[j].is_zero()) out[i * n + j] += ci * r[j];
      }
    }
  return out;
}

Vector tensor_product(const AlgebraStructure& a, const std::vector<TensorTerm>& x, const std::vector<TensorTerm>& y) {
  return tensor_product(a, a, x, y);
}

}  // namespace

ValidationReport validate_algebra(const AlgebraStructure& a) {
  ValidationReport report;
  const std::size_t n = a.dim;
  if (a.mul.rows() != n || a.mul.cols() != n * n || a.unit.size() != n)
    throw DimensionMismatch("algebra structure dimensions");
  std::vector<Vector> prods(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prods[i * n + j] = a.basis_product(i, j);
  auto times_basis_right = [&](const Vector& v, std::size_t k) {
    Vector out = zero_vector(a.field, n);
    for (std::size_t t = 0; t < n; ++t)
      if (!v[t].is_zero()) axpy(out, v[t], prods[t * n + k]);
    return out;
  };
  auto times_basis_left = [&](std::size_t i, const Vector& v) {
    Vector out = zero_vector(a.field, n);
    for (std::size_t t = 0; t < n; ++t)
      if (!v[t].is_zero()) axpy(out, v[t], prods[i * n + t]);
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        check(report, "associativity", {i, j, k}, times_basis_right(prods[i * n + j], k),
              times_basis_left(i, prods[j * n + k]));
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = basis_vector(a.field, n, i);
    check(report, "left unit", {i}, a.product(a.unit, e), e);
    check(report, "right unit", {i}, a.product(e, a.unit), e);
  }
  return report;
}

ValidationReport validate_coalgebra(const CoalgebraStructure& c) {
  ValidationReport report;
  const std::size_t n = c.dim;
  if (c.comul.rows() != n * n || c.comul.cols() != n || c.counit.rows() != 1 || c.counit.cols() != n)
    throw DimensionMismatch("coalgebra structure dimensions");
  for (std::size_t i = 0; i < n; ++i) {
    auto terms = coproduct_terms(c, i);
    Vector lhs = zero_vector(c.field, n * n * n);
    Vector rhs = zero_vector(c.field, n * n * n);
    Vector left_counit = zero_vector(c.field, n);
    Vector right_counit = zero_vector(c.field, n);
    for (const auto& t : terms) {
      // (Delta (x) id): Delta(e_left) (x) e_right
      for (const auto& u : coproduct_terms(c, t.left)) lhs[(u.left * n + u.right) * n + t.right] += t.coeff * u.coeff;
      for (const auto& u : coproduct_terms(c, t.right)) rhs[(t.left * n + u.left) * n + u.right] += t.coeff * u.coeff;
      left_counit[t.right] += c.counit(0, t.left) * t.coeff;
      right_counit[t.left] += c.counit(0, t.right) * t.coeff;
    }
    Vector e = basis_vector(c.field, n, i);
    check(report, "coassociativity", {i}, lhs, rhs);
    check(report, "left counit", {i}, left_counit, e);
    check(report, "right counit", {i}, right_counit, e);
  }
  return report;
}

ValidationReport validate_hopf(const HopfAlgebraStructure& h) {
  const std::size_t n = h.dim();
  if (h.coalgebra.dim != n || h.antipode.rows() != n || h.antipode.cols() != n || !(h.coalgebra.field == h.field()))
    throw DimensionMismatch("hopf structure dimensions");
  ValidationReport report = validate_algebra(h.algebra);
  report.merge(validate_coalgebra(h.coalgebra));
  const FieldSpec& f = h.field();
  std::vector<std::vector<TensorTerm>> terms(n);
  for (std::size_t i = 0; i < n; ++i) terms[i] = coproduct_terms(h.coalgebra, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector prod = h.algebra.basis_product(i, j);
      check(report, "comultiplication is multiplicative", {i, j}, h.comul(prod),
            tensor_product(h.algebra, terms[i], terms[j]));
      check(report, "counit is multiplicative", {i, j}, {h.counit(prod)},
            {h.coalgebra.counit(0, i) * h.coalgebra.counit(0, j)});
    }
  check(report, "comultiplication is unital", {}, h.comul(h.unit()), tensor(h.unit(), h.unit()));
  check(report, "counit is unital", {}, {h.counit(h.unit())}, {f.one()});
  for (std::size_t i = 0; i < n; ++i) {
    Vector left = zero_vector(f, n), right = zero_vector(f, n);
    for (const auto& t : terms[i]) {
      axpy(left, t.coeff, h.mul(h.antipode.column(t.left), h.basis(t.right)));
      axpy(right, t.coeff, h.mul(h.basis(t.left), h.antipode.column(t.right)));
    }
    Vector expected = scale(h.coalgebra.counit(0, i), h.unit());
    check(report, "antipode (left)", {i}, left, expected);
    check(report, "antipode (right)", {i}, right, expected);
  }
  return report;
}

HopfAlgebraStructure dual(const HopfAlgebraStructure& h) {
  const FieldSpec& f = h.field();
  const std::size_t n = h.dim();
  HopfAlgebraStructure d{
      AlgebraStructure{f, n, h.coalgebra.comul.transpose(), Vector(h.coalgebra.counit.row(0).begin(), h.coalgebra.counit.row(0).end())},
      CoalgebraStructure{f, n, h.algebra.mul.transpose(), Matrix::from_rows(f, n, {h.algebra.unit})},
      h.antipode.transpose(),
      {}};
  for (const auto& name : h.basis_names) d.basis_names.push_back(name.ends_with("*") ? name.substr(0, name.size() - 1) : name + "*");
  return d;
}

HopfAlgebraStructure opposite(const HopfAlgebraStructure& h) {
  HopfAlgebraStructure op = h;
  op.algebra.mul = h.algebra.mul * flip(h.field(), h.dim(), h.dim());
  op.antipode = inverse(h.antipode);
  return op;
}

unsigned antipode_order(const HopfAlgebraStructure& h, unsigned bound) {
  Matrix id = Matrix::identity(h.field(), h.dim());
  Matrix p = h.antipode;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * h.antipode;
  }
  return 0;
}

CoalgebraStructure tensor_coalgebra(const CoalgebraStructure& c, const CoalgebraStructure& d) {
  const std::size_t m = c.dim, n = d.dim, mn = m * n;
  Matrix comul(c.field, mn * mn, mn);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& s : coproduct_terms(c, i))
        for (const auto& t : coproduct_terms(d, j))
          comul((s.left * n + t.left) * mn + (s.right * n + t.right), i * n + j) += s.coeff * t.coeff;
  return CoalgebraStructure{c.field, mn, std::move(comul), kron(c.counit, d.counit)};
}

AlgebraStructure tensor_algebra(const AlgebraStructure& a, const AlgebraStructure& b) {
  const std::size_t m = a.dim, n = b.dim, mn = m * n;
  Matrix mul(a.field, mn, mn * mn);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l)
          mul.set_column((i * n + j) * mn + (k * n + l), tensor(a.basis_product(i, k), b.basis_product(j, l)));
  return AlgebraStructure{a.field, mn, std::move(mul), tensor(a.unit, b.unit)};
}

Vector tensor_product(const AlgebraStructure& a, const AlgebraStructure& b, std::span<const Scalar> x,
                      std::span<const Scalar> y) {
  if (x.size() != a.dim * b.dim || y.size() != a.dim * b.dim) throw DimensionMismatch("tensor product");
  return tensor_product(a, b, tensor_terms(x, b.dim), tensor_terms(y, b.dim));
}

Vector tensor_square_product(const AlgebraStructure& a, std::span<const Scalar> x, std::span<const Scalar> y) {
  return tensor_product(a, tensor_terms(x, a.dim), tensor_terms(y, a.dim));
}

Matrix convolve(const Matrix& f, const Matrix& g, const CoalgebraStructure& c, const AlgebraStructure& a) {
  if (f.rows() != a.dim || g.rows() != a.dim || f.cols() != c.dim || g.cols() != c.dim)
    throw DimensionMismatch("convolution");
  Matrix out(a.field, a.dim, c.dim);
  for (std::size_t i = 0; i < c.dim; ++i) {
    Vector v = zero_vector(a.field, a.dim);
    for (const auto& t : coproduct_terms(c, i)) axpy(v, t.coeff, a.product(f.column(t.left), g.column(t.right)));
    out.set_column(i, v);
  }
  return out;
}

Matrix convolution_unit(const CoalgebraStructure& c, const AlgebraStructure& a) {
  return Matrix::from_columns(a.field, a.dim, {a.unit}) * c.counit;
}

Matrix convolution_invert(const Matrix& f, const CoalgebraStructure& c, const AlgebraStructure& a) {
  const std::size_t m = a.dim, n = c.dim;
  if (f.rows() != m || f.cols() != n) throw DimensionMismatch("convolution_invert");
  const FieldSpec& field = a.field;
  // Unknown g(e_b) = sum_r x[r * n + b] e_r. Equations: f * g = u eps and g * f = u eps.
  Matrix system(field, 2 * n * m, m * n);
  Vector rhs = zero_vector(field, 2 * n * m);
  std::vector<Matrix> left_by_f, right_by_f;
  for (std::size_t i = 0; i < n; ++i) {
    left_by_f.push_back(a.left_multiplication(f.column(i)));
    right_by_f.push_back(a.right_multiplication(f.column(i)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < m; ++t) {
      rhs[i * m + t] = c.counit(0, i) * a.unit[t];
      rhs[n * m + i * m + t] = rhs[i * m + t];
    }
    for (const auto& term : coproduct_terms(c, i))
      for (std::size_t t = 0; t < m; ++t)
        for (std::size_t r = 0; r < m; ++r) {
          system(i * m + t, r * n + term.right) += term.coeff * left_by_f[term.left](t, r);
          system(n * m + i * m + t, r * n + term.left) += term.coeff * right_by_f[term.right](t, r);
        }
  }
  auto x = solve(system, rhs);
  if (!x) throw NotConvolutionInvertible("no two-sided convolution inverse");
  Matrix g(field, m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t b = 0; b < n; ++b) g(r, b) = (*x)[r * n + b];
  return g;
}

}  // namespace hgw
