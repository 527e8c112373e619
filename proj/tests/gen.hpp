#pragma once

// Seeded generators for the property tests.  Deliberately independent of the
// library's own samplers (random_gl2 etc.) so that a bias there cannot hide a
// bug here.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "symsq/metaplectic.hpp"
#include "symsq/symsq.hpp"

namespace testgen {

using symsq::cplx;

// splitmix64
struct Gen {
  std::uint64_t state;
  explicit Gen(std::uint64_t seed) : state(seed * 0x9e3779b97f4a7c15ull + 0x1234567ull) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool coin(int one_in) { return range(0, one_in - 1) == 0; }

  std::int64_t unit_residue(const symsq::Field& f) {
    for (;;) {
      const std::int64_t u = range(1, f.modulus - 1);
      if (u % f.p != 0) return u;
    }
  }
  symsq::PadicNumber unit(const symsq::Field& f) { return symsq::PadicNumber::make(f, 0, unit_residue(f)); }
  symsq::PadicNumber padic(const symsq::Field& f, int vlo = -2, int vhi = 2) {
    return symsq::PadicNumber::make(f, static_cast<int>(range(vlo, vhi)), unit_residue(f));
  }
  symsq::PadicNumber padic_or_zero(const symsq::Field& f) {
    return coin(8) ? symsq::PadicNumber::zero(f) : padic(f);
  }

  // Entries with small valuations; determinant kept at full relative precision.
  symsq::GL2 gl2(const symsq::Field& f) {
    for (;;) {
      symsq::GL2 g{padic_or_zero(f), padic_or_zero(f), padic_or_zero(f), padic_or_zero(f)};
      const auto ad = g.a * g.d, bc = g.b * g.c;
      const auto det = ad - bc;
      if (det.is_zero()) continue;
      if (!ad.is_zero() && !bc.is_zero() && det.valuation() - std::min(ad.valuation(), bc.valuation()) > 2) continue;
      return g;
    }
  }
  symsq::GL2 k_element(const symsq::Field& f) {
    for (;;) {
      auto e = [&] { return coin(6) ? symsq::PadicNumber::zero(f) : padic(f, 0, 2); };
      symsq::GL2 g{e(), e(), e(), e()};
      const auto det = g.det();
      if (!det.is_zero() && det.valuation() == 0) return g;
    }
  }

  cplx unimodular() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }
  cplx nonzero_complex() { return std::polar(0.3 + 1.2 * uniform(), 2.0 * std::numbers::pi * uniform()); }

  // exact conductor n
  symsq::MultChar character(std::int64_t p, int n, cplx z) {
    if (n == 0) return symsq::MultChar::unramified(p, z);
    std::int64_t den = p - 1;
    for (int i = 1; i < n; ++i) den *= p;
    for (;;) {
      const std::int64_t num = range(1, den - 1);
      if (n >= 2 && num % p == 0) continue;
      return symsq::MultChar::make(p, n, symsq::Rotation::make(num, den), z);
    }
  }
  symsq::MultChar character(std::int64_t p, int nmax = 2) {
    return character(p, static_cast<int>(range(0, nmax)), nonzero_complex());
  }
  symsq::GL2Rep ps(std::int64_t p, int nmax = 2) {
    return symsq::GL2Rep::principal_series(character(p, nmax), character(p, nmax));
  }
};

inline bool close(cplx a, cplx b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

inline double qd(std::int64_t p) { return static_cast<double>(p); }

}  // namespace testgen
