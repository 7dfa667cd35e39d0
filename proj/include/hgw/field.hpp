#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <variant>

#include "hgw/errors.hpp"

namespace hgw {

class Scalar;

// Exact base field: the rationals or a prime field GF(p).
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  // Throws UnsupportedField unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::PrimeField; }
  // 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  // Element with canonical index i in [0, p) (finite fields only).
  Scalar element(std::uint64_t i) const;
  // Decimal integer, or "a/b" over the rationals; integers are reduced mod p.
  Scalar parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

// An element of a FieldSpec. Residues carry their modulus so that mixing
// fields is caught at the point of arithmetic.
class Scalar {
 public:
  struct Residue {
    std::int64_t value;  // in [0, p)
    std::int64_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  // Rational zero. Prefer FieldSpec::zero().
  Scalar() : v_(mpq_class(0)) {}
  explicit Scalar(Residue r) : v_(r) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  const Residue& residue() const { return std::get<Residue>(v_); }
  FieldSpec field() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Total order used only for canonical sorting: residues by value,
  // rationals numerically.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

  // Decimal integer, "a/b" in lowest terms, or residue in [0, p).
  std::string to_string() const;

 private:
  std::variant<Residue, mpq_class> v_;
};

}  // namespace hgw
