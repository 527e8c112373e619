#include "symsq/metaplectic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "symsq/local_symbols.hpp"

namespace symsq {

// ---- GL2 ----------------------------------------------------------------------

GL2 GL2::identity(const Field& f) {
  return {PadicNumber::one(f), PadicNumber::zero(f), PadicNumber::zero(f), PadicNumber::one(f)};
}

GL2 GL2::torus(const PadicNumber& x, const PadicNumber& y) {
  const Field& f = x.field();
  return {x, PadicNumber::zero(f), PadicNumber::zero(f), y};
}

GL2 GL2::upper(const PadicNumber& x) {
  const Field& f = x.field();
  return {PadicNumber::one(f), x, PadicNumber::zero(f), PadicNumber::one(f)};
}

GL2 GL2::lower(const PadicNumber& x) {
  const Field& f = x.field();
  return {PadicNumber::one(f), PadicNumber::zero(f), x, PadicNumber::one(f)};
}

GL2 GL2::weyl(const Field& f) {
  return {PadicNumber::zero(f), PadicNumber::one(f), PadicNumber::one(f), PadicNumber::zero(f)};
}

GL2 GL2::inverse() const {
  const PadicNumber di = det().inverse();
  return {d * di, -b * di, -c * di, a * di};
}

bool GL2::is_upper_unipotent() const {
  const PadicNumber one = PadicNumber::one(field());
  return c.is_zero() && a == one && d == one;
}

std::string GL2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
}

GL2 operator*(const GL2& x, const GL2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

bool operator==(const GL2& x, const GL2& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

bool near(const GL2& x, const GL2& y, int digits) {
  const Field& f = x.field();
  if (digits < 0) digits = f.precision / 2;
  int top = std::numeric_limits<int>::max();
  for (const PadicNumber* e : {&x.a, &x.b, &x.c, &x.d, &y.a, &y.b, &y.c, &y.d})
    if (!e->is_zero()) top = std::min(top, e->valuation());
  if (top == std::numeric_limits<int>::max()) return true;
  const std::array<PadicNumber, 4> diff = {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  return std::all_of(diff.begin(), diff.end(), [&](const PadicNumber& e) { return e.in_ideal(top + digits); });
}

// ---- Bruhat ---------------------------------------------------------------------

BruhatForm bruhat_decompose(const GL2& g) {
  const Field& f = g.field();
  const GL2 id = GL2::identity(f);
  if (g.det().is_zero()) throw DomainError("bruhat: singular matrix");
  if (g.c.is_zero()) {
    // [[a, b], [0, d]] = t(a, d) n(b / a)
    return {id, GL2::torus(g.a, g.d), id, GL2::upper(g.b / g.a), false};
  }
  // g = n(a/c) t(-det/c, c) w2 n(d/c)
  return {GL2::upper(g.a / g.c), GL2::torus(-g.det() / g.c, g.c), GL2::weyl(f), GL2::upper(g.d / g.c), true};
}

GL2 torus_part(const GL2& g) {
  if (g.c.is_zero()) return GL2::torus(g.a, g.d);
  return GL2::torus(-g.det() / g.c, g.c);
}

// ---- Kubota cocycle -------------------------------------------------------------

PadicNumber kubota_X(const GL2& g) { return g.c.is_zero() ? g.d : g.c; }

int cocycle(const GL2& g1, const GL2& g2) {
  const PadicNumber x1 = kubota_X(g1), x2 = kubota_X(g2), x12 = kubota_X(g1 * g2);
  const PadicNumber r1 = x12 / x1, r2 = x12 / x2;
  return hilbert(g1.det(), r1) * hilbert(r1, r2);
}

namespace {

// BLS work with the Weyl representative w = [[0, -1], [1, 0]], and their torus
// map is taken relative to it: g = n(a/c) t(det/c, c) w n(d/c) on the big cell
// (w2 = t(-1, 1) w, so this differs from torus_part by the sign of the first
// entry).  det is passed in: det(n g) = det(g) exactly, whereas recomputing it
// from the entries of n g loses digits to cancellation.
GL2 bls_torus(const GL2& g, const PadicNumber& det) {
  if (g.c.is_zero()) return GL2::torus(g.a, g.d);
  return GL2::torus(det / g.c, g.c);
}

GL2 bls_weyl(const Field& f) {
  return {PadicNumber::zero(f), -PadicNumber::one(f), PadicNumber::one(f), PadicNumber::zero(f)};
}

// sigma(t(a, b), h) = sigma(t, t(h)) = (a, b')  -- BLS (3), (2)
int sigma_torus(const GL2& t, const GL2& h, const PadicNumber& det) {
  return hilbert(t.a, bls_torus(h, det).d);
}

// sigma(w, h) = sigma(t(wh) t(h)^{-1}, -t(h)) = (first entry, -b')  -- BLS (4), (2)
int sigma_weyl(const GL2& w, const GL2& h, const PadicNumber& det) {
  const GL2 th = bls_torus(h, det), twh = bls_torus(w * h, det);  // det w = 1
  return hilbert(twh.a / th.a, -th.d);
}

}  // namespace

int cocycle_bls(const GL2& g1, const GL2& g2) {
  const Field& f = g1.field();
  const PadicNumber det2 = g2.det();
  if (g1.c.is_zero()) {
    // g1 = t(a, d) n(b/a)
    const GL2 h = GL2::upper(g1.b / g1.a) * g2;
    return sigma_torus(GL2::torus(g1.a, g1.d), h, det2);
  }
  // g1 = n1 t w n2, sigma(g1, g2) = sigma(t, w n2 g2) sigma(w, n2 g2)
  const GL2 w = bls_weyl(f);
  const GL2 t = bls_torus(g1, g1.det());
  const GL2 h = GL2::upper(g1.d / g1.c) * g2;
  return sigma_torus(t, w * h, det2) * sigma_weyl(w, h, det2);
}

int kubota_kappa(const GL2& k) {
  if (k.c.is_zero() || k.c.valuation() < 1) return 1;
  return hilbert(k.c, k.d / k.det());
}

// ---- metaplectic group -----------------------------------------------------------

MetaElement operator*(const MetaElement& x, const MetaElement& y) {
  return {x.g * y.g, cocycle(x.g, y.g) * x.xi * y.xi};
}

MetaElement MetaElement::inverse() const {
  const GL2 gi = g.inverse();
  return {gi, cocycle(g, gi) * xi};
}

GL2 involution(const GL2& g) {
  const PadicNumber di = g.det().inverse();
  return {g.a * di, -g.b * di, -g.c * di, g.d * di};
}

MetaElement meta_involution(const MetaElement& x) {
  if (x.g.is_diagonal()) return {involution(x.g), x.xi * hilbert(x.g.d, x.g.a)};
  if (x.g.is_upper_unipotent()) return {involution(x.g), x.xi};
  throw UnsupportedInput("meta_involution: only torus and unipotent elements are supported");
}

// ---- splitting -------------------------------------------------------------------

Subgroup parse_subgroup(const std::string& s) {
  if (s == "N") return Subgroup::N;
  if (s == "A") return Subgroup::A;
  if (s == "Z2") return Subgroup::Z2;
  if (s == "W") return Subgroup::W;
  if (s == "K") return Subgroup::K;
  throw UnsupportedInput("unknown subgroup '" + s + "'");
}

std::string subgroup_name(Subgroup s) {
  switch (s) {
    case Subgroup::N: return "N";
    case Subgroup::A: return "A";
    case Subgroup::Z2: return "Z2";
    case Subgroup::W: return "W";
    case Subgroup::K: return "K";
  }
  return "?";
}

PadicNumber random_unit(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(1, f.modulus - 1);
  for (;;) {
    const std::int64_t u = d(rng);
    if (u % f.p) return PadicNumber::make(f, 0, u);
  }
}

PadicNumber random_padic(const Field& f, std::mt19937_64& rng, int vmin, int vmax) {
  std::uniform_int_distribution<int> v(vmin, vmax);
  const int e = v(rng);
  return PadicNumber::make(f, e, random_unit(f, rng).unit());
}

namespace {

PadicNumber maybe_zero(const Field& f, std::mt19937_64& rng, int vmin, int vmax) {
  if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return PadicNumber::zero(f);
  return random_padic(f, rng, vmin, vmax);
}

// det computed without catastrophic loss of relative precision
bool well_conditioned(const GL2& g) {
  const PadicNumber ad = g.a * g.d, bc = g.b * g.c;
  const PadicNumber det = ad - bc;
  if (det.is_zero()) return false;
  if (ad.is_zero() || bc.is_zero()) return true;
  const int floor = std::min(ad.valuation(), bc.valuation());
  return det.valuation() - floor <= g.field().precision / 2;
}

}  // namespace

GL2 random_gl2(const Field& f, std::mt19937_64& rng) {
  const int kind = std::uniform_int_distribution<int>(0, 19)(rng);
  switch (kind) {
    case 0: return GL2::upper(random_padic(f, rng));
    case 1: return GL2::lower(random_padic(f, rng));
    case 2: return GL2::torus(random_padic(f, rng), random_padic(f, rng));
    case 3: return GL2::weyl(f) * GL2::torus(random_padic(f, rng), random_padic(f, rng));
    default: break;
  }
  for (;;) {
    GL2 g{maybe_zero(f, rng, -2, 2), maybe_zero(f, rng, -2, 2), maybe_zero(f, rng, -2, 2),
          maybe_zero(f, rng, -2, 2)};
    if (well_conditioned(g)) return g;
  }
}

namespace {

GL2 lift(const GL2& m, const Field& F) {
  auto L = [&](const PadicNumber& x) {
    return x.is_zero() ? PadicNumber::zero(F) : PadicNumber::make(F, x.valuation(), x.unit());
  };
  return {L(m.a), L(m.b), L(m.c), L(m.d)};
}

// lo and hi (the same product at higher precision) land in the same cell with
// the same X and det valuations
bool same_shape(const GL2& lo, const GL2& hi) {
  auto agree = [](const PadicNumber& x, const PadicNumber& y) {
    if (x.is_zero()) return y.is_zero() || y.valuation() >= x.field().precision + 40;
    return !y.is_zero() && x.valuation() == y.valuation();
  };
  const PadicNumber dl = lo.det();
  return !dl.is_zero() && agree(lo.c, hi.c) && agree(lo.d, hi.d) && agree(dl, hi.det());
}

}  // namespace

bool products_resolved(const GL2& a, const GL2& b, const GL2& c) {
  const Field& f = a.field();
  int hi = 2 * f.precision;
  while (hi > f.precision && std::pow(static_cast<double>(f.p), hi) > 0x1p61) --hi;
  const Field F = Field::make(f.p, hi);
  const GL2 A = lift(a, F), B = lift(b, F), C = lift(c, F);
  return same_shape(a * b, A * B) && same_shape(b * c, B * C) && same_shape(a * b * c, A * B * C) &&
         same_shape(a * (b * c), A * (B * C));
}

GL2 random_k(const Field& f, std::mt19937_64& rng) {
  for (;;) {
    GL2 g{maybe_zero(f, rng, 0, 2), maybe_zero(f, rng, 0, 2), maybe_zero(f, rng, 0, 2),
          maybe_zero(f, rng, 0, 2)};
    const PadicNumber det = g.det();
    if (!det.is_zero() && det.valuation() == 0) return g;
  }
}

SplittingResult check_splitting(const Field& f, Subgroup s, std::size_t samples, std::uint64_t seed) {
  SplittingResult r;
  std::mt19937_64 rng(seed);
  auto record = [&](const GL2& x, const GL2& y) {
    ++r.samples;
    if (cocycle(x, y) != 1) ++r.nontrivial;
  };
  const PadicNumber one = PadicNumber::one(f);
  switch (s) {
    case Subgroup::N:
      r.predicted = true;
      for (std::size_t i = 0; i < samples; ++i) record(GL2::upper(random_padic(f, rng)), GL2::upper(random_padic(f, rng)));
      break;
    case Subgroup::A:
      r.predicted = true;
      for (std::size_t i = 0; i < samples; ++i)
        record(GL2::torus(random_padic(f, rng), one), GL2::torus(random_padic(f, rng), one));
      break;
    case Subgroup::Z2:
      r.predicted = true;
      for (std::size_t i = 0; i < samples; ++i) {
        const PadicNumber a = random_padic(f, rng), b = random_padic(f, rng);
        record(GL2::scalar(a * a), GL2::scalar(b * b));
      }
      break;
    case Subgroup::W: {
      r.predicted = hilbert(-one, -one) == 1;
      // signed permutation matrices
      std::vector<GL2> w;
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          const PadicNumber x = s1 > 0 ? one : -one, y = s2 > 0 ? one : -one;
          w.push_back(GL2::torus(x, y));
          w.push_back(GL2::weyl(f) * GL2::torus(x, y));
        }
      for (const auto& x : w)
        for (const auto& y : w) record(x, y);
      break;
    }
    case Subgroup::K:
      r.predicted = true;
      for (std::size_t i = 0; i < samples; ++i) record(random_k(f, rng), random_k(f, rng));
      break;
  }
  r.split = r.nontrivial == 0;
  return r;
}

}  // namespace symsq
