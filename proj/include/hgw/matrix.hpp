#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hgw/field.hpp"

namespace hgw {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
Vector basis_vector(const FieldSpec& field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& s, std::span<const Scalar> v);
// Accumulates s*v into acc.
void axpy(Vector& acc, const Scalar& s, std::span<const Scalar> v);
// Row-major flattening: (a, b) -> a * b.size() + b.
Vector tensor(std::span<const Scalar> a, std::span<const Scalar> b);

// Dense row-major matrix over an exact field. A linear map V -> W is stored
// with rows = dim W and cols = dim V and acts on column vectors.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(const FieldSpec& field, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_ints(const FieldSpec& field, const std::vector<std::vector<long>>& rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);

  Vector apply(std::span<const Scalar> v) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

// Kronecker product; consistent with the row-major tensor flattening.
Matrix kron(const Matrix& a, const Matrix& b);
// Flip map V (x) W -> W (x) V for dim V = m, dim W = n.
Matrix flip(const FieldSpec& field, std::size_t m, std::size_t n);
// (f (x) id) t for t in V (x) W with dim W = n.
Vector apply_left(const Matrix& f, std::span<const Scalar> t, std::size_t n);
// (id (x) f) t for t in V (x) W with dim V = m.
Vector apply_right(const Matrix& f, std::span<const Scalar> t, std::size_t m);
Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);

// Reduced row echelon form; same shape, zero rows at the bottom.
Matrix rref(const Matrix& m);
// RREF plus the pivot column of each nonzero row.
Matrix rref(const Matrix& m, std::vector<std::size_t>& pivots);
std::size_t rank(const Matrix& m);
bool is_bijective(const Matrix& m);
// Throws NotInvertible.
Matrix inverse(const Matrix& m);
Matrix power(const Matrix& m, unsigned k);
// Some x with a x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b);

}  // namespace hgw
