#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hgw/matrix.hpp"

namespace hgw {

// A subspace of field^ambient in canonical form: the basis is the list of
// nonzero rows of its reduced row echelon form. Equality is structural.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& field, std::size_t ambient);
  static Subspace full(const FieldSpec& field, std::size_t ambient);
  static Subspace span(const FieldSpec& field, std::size_t ambient, const std::vector<Vector>& vectors);
  // Row space of m.
  static Subspace row_space(const Matrix& m);

  const FieldSpec& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  std::span<const Scalar> basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient(); }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  // v minus its components along the pivot rows; zero iff v is in the space.
  Vector reduce(std::span<const Scalar> v) const;
  // Coefficients of v in the RREF basis. Throws DimensionMismatch if v is not in the space.
  Vector coordinates(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient() == b.ambient() && a.basis_ == b.basis_;
  }
  // Canonical order: dimension, then lexicographic RREF entries.
  friend bool canonical_less(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// Quotient field^ambient / kernel with the canonical complement: coordinates
// of the quotient are the non-pivot columns of the kernel's RREF.
struct QuotientSpace {
  std::size_t ambient;
  Subspace kernel;
  Matrix projection;  // (ambient - dim kernel) x ambient
  Matrix section;     // ambient x (ambient - dim kernel)

  std::size_t dim() const { return projection.rows(); }
};

// Kernel of f as a map field^cols -> field^rows.
Subspace kernel(const Matrix& f);
// Image of the subspace v under f.
Subspace image(const Matrix& f, const Subspace& v);
Subspace image(const Matrix& f);
Subspace sum(const Subspace& v, const Subspace& w);
Subspace sum(std::span<const Subspace> spaces);
Subspace intersect(std::span<const Subspace> spaces);
Subspace intersect(const Subspace& v, const Subspace& w);
// Span of v_i (x) w_j in ambient m * n (row-major flattening).
Subspace subspace_tensor(const Subspace& v, const Subspace& w);
// {x : f x in w}.
Subspace preimage(const Matrix& f, const Subspace& w);
// {f : f(v) = 0 for all v in space} in dual coordinates.
Subspace annihilator(const Subspace& space);
QuotientSpace quotient(std::size_t ambient, const Subspace& kernel);

// Number of subspaces of GF(p)^n of dimension k.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t p);
std::uint64_t subspace_count(std::uint64_t n, std::uint64_t p);

inline constexpr std::uint64_t kDefaultEnumerationCap = 100000;

// Every subspace of GF(p)^ambient exactly once, ordered by dimension then
// lexicographic RREF. Throws UnsupportedField for Q and CapExceeded when the
// Gaussian-binomial count exceeds cap.
std::vector<Subspace> enumerate_subspaces(std::size_t ambient, const FieldSpec& field,
                                          std::optional<std::size_t> dim_filter = std::nullopt,
                                          std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace hgw
