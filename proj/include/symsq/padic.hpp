#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "symsq/errors.hpp"

namespace symsq {

namespace intmod {

std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow(std::int64_t base, std::int64_t exp, std::int64_t m);
// Inverse of a modulo m by extended Euclid; throws DomainError if gcd != 1.
std::int64_t inverse(std::int64_t a, std::int64_t m);
std::int64_t reduce(std::int64_t a, std::int64_t m);
std::int64_t ipow(std::int64_t base, int exp);
bool is_prime(std::int64_t n);
// Largest e with p^e | n (n != 0).
int valuation(std::int64_t n, std::int64_t p);

}  // namespace intmod

/// The base field Q_p together with the global working precision: unit parts
/// are carried modulo p^N.  The residue field has q = p elements.
struct Field {
  std::int64_t p = 3;
  int precision = 8;
  std::int64_t modulus = 6561;  // p^precision

  static Field make(std::int64_t p, int precision);

  std::int64_t q() const { return p; }
  std::int64_t pow_p(int e) const;

  bool operator==(const Field&) const = default;
};

/// Smallest positive quadratic non-residue modulo p.
std::int64_t smallest_nonresidue(std::int64_t p);

/// Legendre symbol (u/p) for u coprime to p.
int legendre(std::int64_t u, std::int64_t p);

/// Element of Q_p at fixed relative precision: either the distinguished zero
/// or p^v * u with u a unit residue modulo p^N.
class PadicNumber {
 public:
  PadicNumber() = default;

  static PadicNumber zero(const Field& f);
  static PadicNumber one(const Field& f) { return from_integer(f, 1); }
  static PadicNumber make(const Field& f, int valuation, std::int64_t unit);
  static PadicNumber from_integer(const Field& f, std::int64_t n);
  static PadicNumber from_rational(const Field& f, std::int64_t num, std::int64_t den);
  static PadicNumber uniformizer_power(const Field& f, int e) { return make(f, e, 1); }

  const Field& field() const { return field_; }
  bool is_zero() const { return zero_; }
  int valuation() const;
  std::int64_t unit() const;
  // Unit part reduced modulo p^k (k <= N).
  std::int64_t unit_mod(int k) const;
  // a in p^k O (zero belongs to every ideal).
  bool in_ideal(int k) const { return zero_ || valuation_ >= k; }
  double abs() const;

  PadicNumber inverse() const;
  PadicNumber pow(int e) const;
  PadicNumber operator-() const;

  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend bool operator==(const PadicNumber& a, const PadicNumber& b);

  std::string to_string() const;

 private:
  PadicNumber(const Field& f, bool zero, int v, std::int64_t u)
      : field_(f), zero_(zero), valuation_(v), unit_(u) {}

  Field field_{};
  bool zero_ = true;
  int valuation_ = 0;
  std::int64_t unit_ = 0;
};

/// Square-class representative of F^x/(F^x)^2: valuation parity and whether
/// the unit part is the fixed non-residue u0.
struct SquareClass {
  int parity = 0;          // v mod 2
  bool nonresidue = false; // unit class u0

  PadicNumber representative(const Field& f) const;
  std::string name() const;  // "1", "u0", "pi", "u0pi"
  bool operator==(const SquareClass&) const = default;
};

SquareClass square_class(const PadicNumber& a);
bool is_square(const PadicNumber& a);
// Hensel-lifted square root; branch chosen with leading unit digit in
// [1, (p-1)/2].
PadicNumber sqrt(const PadicNumber& a);

}  // namespace symsq
