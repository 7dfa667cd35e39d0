#include "hgw/subspace.hpp"

#include <algorithm>
#include <limits>

namespace hgw {

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient) {
  return Subspace(Matrix(field, 0, ambient), {});
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient), std::move(pivots));
}

Subspace Subspace::row_space(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(m, pivots);
  Matrix basis(m.field(), pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) basis(i, c) = r(i, c);
  return Subspace(std::move(basis), std::move(pivots));
}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(field, ambient, vectors));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.emplace_back(basis_.row(i).begin(), basis_.row(i).end());
  return out;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient()) throw DimensionMismatch("subspace reduce");
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, basis_.row(i));
  }
  return r;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw DimensionMismatch("coordinates of a vector outside the subspace");
  Vector c;
  c.reserve(dim());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

bool Subspace::contains(std::span<const Scalar> v) const { return hgw::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient() != ambient()) throw DimensionMismatch("subspace containment");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

bool canonical_less(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) return a.ambient() < b.ambient();
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.ambient(); ++c) {
      const Scalar& x = a.basis()(r, c);
      const Scalar& y = b.basis()(r, c);
      if (canonical_less(x, y)) return true;
      if (canonical_less(y, x)) return false;
    }
  return false;
}

Subspace kernel(const Matrix& f) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(f, pivots);
  std::vector<bool> is_pivot(f.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t j = 0; j < f.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vector v = zero_vector(f.field(), f.cols());
    v[j] = f.field().one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, j);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(f.field(), f.cols(), vectors);
}

Subspace image(const Matrix& f, const Subspace& v) {
  if (v.ambient() != f.cols()) throw DimensionMismatch("image");
  std::vector<Vector> vectors;
  for (std::size_t i = 0; i < v.dim(); ++i) vectors.push_back(f.apply(v.basis_vector(i)));
  return Subspace::span(f.field(), f.rows(), vectors);
}

Subspace image(const Matrix& f) { return Subspace::row_space(f.transpose()); }

Subspace sum(const Subspace& v, const Subspace& w) {
  if (v.ambient() != w.ambient()) throw DimensionMismatch("subspace sum");
  return Subspace::row_space(vstack(v.basis(), w.basis()));
}

Subspace sum(std::span<const Subspace> spaces) {
  if (spaces.empty()) throw DimensionMismatch("sum of empty family");
  Matrix stacked = spaces[0].basis();
  for (std::size_t i = 1; i < spaces.size(); ++i) {
    if (spaces[i].ambient() != spaces[0].ambient()) throw DimensionMismatch("subspace sum");
    stacked = vstack(stacked, spaces[i].basis());
  }
  return Subspace::row_space(stacked);
}

Subspace annihilator(const Subspace& space) { return kernel(space.basis()); }

Subspace intersect(std::span<const Subspace> spaces) {
  if (spaces.empty()) throw DimensionMismatch("intersection of empty family");
  // The intersection is cut out by the union of the defining equations.
  Matrix equations = annihilator(spaces[0]).basis();
  for (std::size_t i = 1; i < spaces.size(); ++i) {
    if (spaces[i].ambient() != spaces[0].ambient()) throw DimensionMismatch("subspace intersection");
    equations = vstack(equations, annihilator(spaces[i]).basis());
  }
  return kernel(equations);
}

Subspace intersect(const Subspace& v, const Subspace& w) {
  const Subspace pair[] = {v, w};
  return intersect(pair);
}

Subspace subspace_tensor(const Subspace& v, const Subspace& w) {
  std::vector<Vector> vectors;
  vectors.reserve(v.dim() * w.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) vectors.push_back(tensor(v.basis_vector(i), w.basis_vector(j)));
  return Subspace::span(v.field(), v.ambient() * w.ambient(), vectors);
}

Subspace preimage(const Matrix& f, const Subspace& w) {
  if (f.rows() != w.ambient()) throw DimensionMismatch("preimage");
  Matrix equations = annihilator(w).basis();
  return kernel(equations * f);
}

QuotientSpace quotient(std::size_t ambient, const Subspace& k) {
  if (k.ambient() != ambient) throw DimensionMismatch("quotient");
  const FieldSpec& field = k.field();
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : k.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) complement.push_back(c);
  Matrix projection(field, complement.size(), ambient);
  Matrix section(field, ambient, complement.size());
  for (std::size_t j = 0; j < complement.size(); ++j) {
    projection(j, complement[j]) = field.one();
    section(complement[j], j) = field.one();
    for (std::size_t i = 0; i < k.dim(); ++i) projection(j, k.pivots()[i]) = -k.basis()(i, complement[j]);
  }
  return QuotientSpace{ambient, k, std::move(projection), std::move(section)};
}

namespace {

mpz_class gaussian_binomial_mpz(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  mpz_class num = 1, den = 1, pz = static_cast<unsigned long>(p);
  for (std::uint64_t i = 0; i < k; ++i) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), pz.get_mpz_t(), n - i);
    mpz_pow_ui(b.get_mpz_t(), pz.get_mpz_t(), i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

std::uint64_t saturate(const mpz_class& z) {
  if (z > mpz_class(std::to_string(std::numeric_limits<std::uint64_t>::max())))
    return std::numeric_limits<std::uint64_t>::max();
  return std::stoull(z.get_str());
}

}  // namespace

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  return saturate(gaussian_binomial_mpz(n, k, p));
}

std::uint64_t subspace_count(std::uint64_t n, std::uint64_t p) {
  mpz_class total = 0;
  for (std::uint64_t k = 0; k <= n; ++k) total += gaussian_binomial_mpz(n, k, p);
  return saturate(total);
}

std::vector<Subspace> enumerate_subspaces(std::size_t ambient, const FieldSpec& field,
                                          std::optional<std::size_t> dim_filter, std::uint64_t cap) {
  if (!field.is_finite()) throw UnsupportedField("subspace enumeration needs a finite field");
  const std::uint64_t p = field.characteristic();
  std::uint64_t count = dim_filter ? gaussian_binomial(ambient, *dim_filter, p) : subspace_count(ambient, p);
  if (count > cap)
    throw CapExceeded("enumeration of " + std::to_string(count) + " subspaces exceeds cap " + std::to_string(cap));

  std::vector<Subspace> out;
  out.reserve(count);
  for (std::size_t k = 0; k <= ambient; ++k) {
    if (dim_filter && *dim_filter != k) continue;
    std::vector<Subspace> layer;
    // Pivot profiles: k-subsets of columns, then every assignment of the
    // free entries to the right of each pivot.
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    while (true) {
      std::vector<bool> is_pivot(ambient, false);
      for (auto c : cols) is_pivot[c] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free_slots;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = cols[r] + 1; c < ambient; ++c)
          if (!is_pivot[c]) free_slots.emplace_back(r, c);
      std::vector<std::uint64_t> digits(free_slots.size(), 0);
      while (true) {
        Matrix basis(field, k, ambient);
        for (std::size_t r = 0; r < k; ++r) basis(r, cols[r]) = field.one();
        for (std::size_t s = 0; s < free_slots.size(); ++s)
          basis(free_slots[s].first, free_slots[s].second) = field.element(digits[s]);
        layer.push_back(Subspace::row_space(basis));
        std::size_t s = 0;
        while (s < digits.size() && ++digits[s] == p) digits[s++] = 0;
        if (s == digits.size()) break;
      }
      // next k-subset in lexicographic order
      std::size_t i = k;
      while (i > 0 && cols[i - 1] == ambient - k + i - 1) --i;
      if (i == 0) break;
      ++cols[i - 1];
      for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    std::sort(layer.begin(), layer.end(), [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); });
    for (auto& s : layer) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace hgw
