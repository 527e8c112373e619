#include "symsq/padic.hpp"

#include <cmath>
#include <limits>

namespace symsq {

namespace intmod {

std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<unsigned __int128>(reduce(a, m)) *
                                   static_cast<unsigned __int128>(reduce(b, m)) %
                                   static_cast<unsigned __int128>(m));
}

std::int64_t reduce(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = reduce(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul(result, base, m);
    base = mul(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::int64_t inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = reduce(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw DomainError("intmod::inverse: not invertible");
  return reduce(old_s, m);
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int valuation(std::int64_t n, std::int64_t p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace intmod

Field Field::make(std::int64_t p, int precision) {
  if (p < 3 || !intmod::is_prime(p)) throw DomainError("field: p must be an odd prime");
  if (precision < 1) throw DomainError("field: precision must be >= 1");
  // p^N must leave room for one carry in 63-bit arithmetic.
  long double bound = std::pow(static_cast<long double>(p), precision);
  if (bound > static_cast<long double>(std::int64_t{1} << 61))
    throw PrecisionError("field: p^N exceeds 2^61");
  return Field{p, precision, intmod::ipow(p, precision)};
}

std::int64_t Field::pow_p(int e) const { return intmod::ipow(p, e); }

std::int64_t smallest_nonresidue(std::int64_t p) {
  for (std::int64_t u = 2; u < p; ++u)
    if (legendre(u, p) == -1) return u;
  throw DomainError("smallest_nonresidue: no non-residue");
}

int legendre(std::int64_t u, std::int64_t p) {
  u = intmod::reduce(u, p);
  if (u == 0) throw DomainError("legendre: argument divisible by p");
  return intmod::pow(u, (p - 1) / 2, p) == 1 ? 1 : -1;
}

PadicNumber PadicNumber::zero(const Field& f) { return PadicNumber(f, true, 0, 0); }

PadicNumber PadicNumber::make(const Field& f, int valuation, std::int64_t unit) {
  unit = intmod::reduce(unit, f.modulus);
  if (unit % f.p == 0) throw DomainError("padic: unit part divisible by p");
  return PadicNumber(f, false, valuation, unit);
}

PadicNumber PadicNumber::from_integer(const Field& f, std::int64_t n) {
  if (n == 0) return zero(f);
  const int v = intmod::valuation(n, f.p);
  for (int i = 0; i < v; ++i) n /= f.p;
  return make(f, v, n);
}

PadicNumber PadicNumber::from_rational(const Field& f, std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("padic: zero denominator");
  return from_integer(f, num) / from_integer(f, den);
}

int PadicNumber::valuation() const {
  if (zero_) throw DomainError("padic: valuation of zero");
  return valuation_;
}

std::int64_t PadicNumber::unit() const {
  if (zero_) throw DomainError("padic: unit part of zero");
  return unit_;
}

std::int64_t PadicNumber::unit_mod(int k) const {
  if (k > field_.precision) throw PrecisionError("padic: unit requested beyond precision");
  return unit() % field_.pow_p(k);
}

double PadicNumber::abs() const {
  if (zero_) return 0.0;
  return std::pow(static_cast<double>(field_.p), -valuation_);
}

PadicNumber PadicNumber::inverse() const {
  if (zero_) throw DomainError("padic: inverse of zero");
  return PadicNumber(field_, false, -valuation_, intmod::inverse(unit_, field_.modulus));
}

PadicNumber PadicNumber::pow(int e) const {
  if (zero_) {
    if (e <= 0) throw DomainError("padic: non-positive power of zero");
    return *this;
  }
  const PadicNumber base = e < 0 ? inverse() : *this;
  const int n = e < 0 ? -e : e;
  return PadicNumber(field_, false, base.valuation_ * n, intmod::pow(base.unit_, n, field_.modulus));
}

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  return PadicNumber(field_, false, valuation_, field_.modulus - unit_);
}

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  if (!(a.field_ == b.field_)) throw DomainError("padic: field mismatch");
  if (a.zero_ || b.zero_) return PadicNumber::zero(a.field_);
  return PadicNumber(a.field_, false, a.valuation_ + b.valuation_,
                     intmod::mul(a.unit_, b.unit_, a.field_.modulus));
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) { return a * b.inverse(); }

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  if (!(a.field_ == b.field_)) throw DomainError("padic: field mismatch");
  if (a.zero_) return b;
  if (b.zero_) return a;
  const Field& f = a.field_;
  const PadicNumber& lo = a.valuation_ <= b.valuation_ ? a : b;
  const PadicNumber& hi = a.valuation_ <= b.valuation_ ? b : a;
  const int gap = hi.valuation_ - lo.valuation_;
  if (gap >= f.precision) return lo;
  std::int64_t sum = (lo.unit_ + intmod::mul(f.pow_p(gap), hi.unit_, f.modulus)) % f.modulus;
  if (sum == 0) return PadicNumber::zero(f);
  // Cancellation: digits below the shifted precision are padded with zeros.
  const int shift = intmod::valuation(sum, f.p);
  for (int i = 0; i < shift; ++i) sum /= f.p;
  return PadicNumber(f, false, lo.valuation_ + shift, sum);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

bool operator==(const PadicNumber& a, const PadicNumber& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
  return a.valuation_ == b.valuation_ && a.unit_ == b.unit_;
}

std::string PadicNumber::to_string() const {
  if (zero_) return "0";
  return "p^" + std::to_string(valuation_) + "*" + std::to_string(unit_);
}

PadicNumber SquareClass::representative(const Field& f) const {
  return PadicNumber::make(f, parity, nonresidue ? smallest_nonresidue(f.p) : 1);
}

std::string SquareClass::name() const {
  if (parity == 0) return nonresidue ? "u0" : "1";
  return nonresidue ? "u0pi" : "pi";
}

SquareClass square_class(const PadicNumber& a) {
  if (a.is_zero()) throw DomainError("square_class: zero");
  const int v = a.valuation();
  return SquareClass{((v % 2) + 2) % 2, legendre(a.unit(), a.field().p) == -1};
}

bool is_square(const PadicNumber& a) {
  if (a.is_zero()) throw DomainError("is_square: zero");
  return square_class(a) == SquareClass{};
}

namespace {

// Tonelli-Shanks square root modulo an odd prime.
std::int64_t sqrt_mod_prime(std::int64_t u, std::int64_t p) {
  u = intmod::reduce(u, p);
  std::int64_t s = p - 1;
  int e = 0;
  while (s % 2 == 0) {
    s /= 2;
    ++e;
  }
  const std::int64_t z = smallest_nonresidue(p);
  std::int64_t m = e;
  std::int64_t c = intmod::pow(z, s, p);
  std::int64_t t = intmod::pow(u, s, p);
  std::int64_t r = intmod::pow(u, (s + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = intmod::mul(tt, tt, p);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = intmod::mul(b, b, p);
    m = i;
    c = intmod::mul(b, b, p);
    t = intmod::mul(t, c, p);
    r = intmod::mul(r, b, p);
  }
  return r;
}

}  // namespace

PadicNumber sqrt(const PadicNumber& a) {
  if (!is_square(a)) throw DomainError("sqrt: not a square");
  const Field& f = a.field();
  const std::int64_t u = a.unit();
  std::int64_t r = sqrt_mod_prime(u, f.p);
  if (r > (f.p - 1) / 2) r = f.p - r;
  // Newton lifting r <- r - (r^2 - u) / (2r), doubling the known digits.
  std::int64_t known = f.p;
  while (known < f.modulus) {
    known = (known > f.modulus / known) ? f.modulus : known * known;
    const std::int64_t r2 = intmod::mul(r, r, known);
    const std::int64_t num = intmod::reduce(r2 - u, known);
    const std::int64_t den = intmod::inverse(intmod::mul(2, r, known), known);
    r = intmod::reduce(r - intmod::mul(num, den, known), known);
  }
  return PadicNumber::make(f, a.valuation() / 2, r);
}

}  // namespace symsq
