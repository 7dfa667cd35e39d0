#include "hgw/field.hpp"

#include <charconv>
#include <limits>

namespace hgw {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) throw UnsupportedField("modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw UnsupportedField("not a prime: " + std::to_string(p));
  return FieldSpec(Kind::PrimeField, p);
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(std::int64_t v) const {
  if (kind_ == Kind::Rationals) return Scalar(mpq_class(static_cast<long>(v)));
  auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Scalar(Scalar::Residue{r, p});
}

Scalar FieldSpec::element(std::uint64_t i) const {
  if (kind_ != Kind::PrimeField) throw UnsupportedField("element index requires a finite field");
  return Scalar(Scalar::Residue{static_cast<std::int64_t>(i % p_), static_cast<std::int64_t>(p_)});
}

Scalar FieldSpec::parse(std::string_view text) const {
  if (text.empty()) throw ParseError("empty scalar");
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_int(num) || (slash != std::string_view::npos && !valid_int(den)))
    throw ParseError("malformed scalar: " + std::string(text));
  if (kind_ == Kind::Rationals) {
    mpq_class q;
    q.get_num() = mpz_class(std::string(num), 10);
    q.get_den() = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + std::string(text));
    return Scalar(q);
  }
  if (slash != std::string_view::npos) throw ParseError("fraction in prime field: " + std::string(text));
  mpz_class z(std::string(num), 10);
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
  return element(r.get_ui());
}

std::string FieldSpec::name() const {
  return kind_ == Kind::Rationals ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

void check_same(const Scalar::Residue& a, const Scalar::Residue& b) {
  if (a.p != b.p) throw FieldMismatch("residues of different moduli");
}

}  // namespace

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value == 1 % r->p;
  return std::get<mpq_class>(v_) == 1;
}

FieldSpec Scalar::field() const {
  if (auto* r = std::get_if<Residue>(&v_)) return FieldSpec::prime(static_cast<std::uint64_t>(r->p));
  return FieldSpec::rationals();
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&v_)) return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (auto* r = std::get_if<Residue>(&v_)) return Scalar(Residue{mod_pow(r->value, r->p - 2, r->p), r->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (auto* r = std::get_if<Residue>(&v_)) {
    auto* s = std::get_if<Residue>(&o.v_);
    if (!s) throw FieldMismatch("residue + rational");
    check_same(*r, *s);
    r->value += s->value;
    if (r->value >= r->p) r->value -= r->p;
    return *this;
  }
  auto* q = std::get_if<mpq_class>(&o.v_);
  if (!q) throw FieldMismatch("rational + residue");
  std::get<mpq_class>(v_) += *q;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (auto* r = std::get_if<Residue>(&v_)) {
    auto* s = std::get_if<Residue>(&o.v_);
    if (!s) throw FieldMismatch("residue * rational");
    check_same(*r, *s);
    r->value = r->value * s->value % r->p;
    return *this;
  }
  auto* q = std::get_if<mpq_class>(&o.v_);
  if (!q) throw FieldMismatch("rational * residue");
  std::get<mpq_class>(v_) *= *q;
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (auto* r = std::get_if<Scalar::Residue>(&a.v_)) return *r == std::get<Scalar::Residue>(b.v_);
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
  if (auto* r = std::get_if<Scalar::Residue>(&a.v_)) return r->value < std::get<Scalar::Residue>(b.v_).value;
  return std::get<mpq_class>(a.v_) < std::get<mpq_class>(b.v_);
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  const mpq_class& q = std::get<mpq_class>(v_);
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

}  // namespace hgw
