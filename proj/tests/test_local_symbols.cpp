#include <doctest.h>

#include <numbers>
#include <set>

#include "gen.hpp"
#include "symsq/local_symbols.hpp"

using namespace symsq;

namespace {

// (a, b) = 1 iff b is a norm from Q_p(sqrt a).  Norms x^2 - a y^2 with
// x, y in [0, p^2) already meet every norm class; collect them by square class.  a and b are given by their class
// representatives in {1, u0, p, u0 p}.
struct Cls {
  int parity;
  int residue;  // legendre of the unit part
  bool operator<(const Cls& o) const { return std::tie(parity, residue) < std::tie(o.parity, o.residue); }
};

int norm_oracle(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::vector<bool> sq(p, false);
  for (std::int64_t x = 1; x < p; ++x) sq[(x * x) % p] = true;
  auto cls = [&](std::int64_t n) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    const std::int64_t r = ((n % p) + p) % p;
    return Cls{v % 2, sq[r] ? 1 : -1};
  };
  std::set<Cls> norms;
  const std::int64_t m = p * p;
  for (std::int64_t x = 0; x < m; ++x)
    for (std::int64_t y = 0; y < m; ++y) {
      std::int64_t n = x * x - a * y * y;
      if (n == 0) continue;
      norms.insert(cls(n));
    }
  return norms.count(cls(b)) ? 1 : -1;
}

cplx classical_gauss(std::int64_t u, std::int64_t p) {
  cplx s = 0.0;
  for (std::int64_t x = 0; x < p; ++x)
    s += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((u * x * x) % p) / static_cast<double>(p));
  return s;
}

}  // namespace

TEST_CASE("hilbert: examples over Q_5") {
  const auto f = Field::make(5, 6);
  const auto P = [&](std::int64_t n) { return PadicNumber::from_integer(f, n); };
  CHECK(hilbert(P(2), P(5)) == -1);
  CHECK(hilbert(P(5), P(5)) == 1);   // -1 is a square mod 5
  CHECK(hilbert(P(2), P(3)) == 1);
  const auto f3 = Field::make(3, 6);
  CHECK(hilbert(PadicNumber::from_integer(f3, 3), PadicNumber::from_integer(f3, 3)) == -1);
}

TEST_CASE("hilbert: agrees with the norm-group oracle on all class pairs") {
  for (std::int64_t p : {3, 5, 7, 11}) {
    const auto f = Field::make(p, 6);
    const std::int64_t u0 = smallest_nonresidue(p);
    const std::int64_t reps[] = {1, u0, p, u0 * p};
    for (auto a : reps)
      for (auto b : reps) {
        INFO("p=" << p << " a=" << a << " b=" << b);
        const int expected = norm_oracle(a, b, p);
        CHECK(hilbert(PadicNumber::from_integer(f, a), PadicNumber::from_integer(f, b)) == expected);
        CHECK(hilbert_oracle(PadicNumber::from_integer(f, a), PadicNumber::from_integer(f, b)) == expected);
      }
  }
}

TEST_CASE("hilbert: bilinear, symmetric, Steinberg on random elements") {
  testgen::Gen g(21);
  for (std::int64_t p : {3, 5, 7}) {
    const auto f = Field::make(p, 8);
    for (int i = 0; i < 500; ++i) {
      const auto a = g.padic(f), b = g.padic(f), c = g.padic(f);
      CHECK(hilbert(a * b, c) == hilbert(a, c) * hilbert(b, c));
      CHECK(hilbert(a, b) == hilbert(b, a));
      CHECK(hilbert(a, -a) == 1);
      CHECK(hilbert(a * a, b) == 1);
      const auto one = PadicNumber::one(f);
      if (a != one) CHECK(hilbert(a, one - a) == 1);
    }
  }
}

TEST_CASE("chi_b: quadratic character attached to b") {
  const auto f = Field::make(5, 6);
  const auto u0 = PadicNumber::from_integer(f, smallest_nonresidue(5));
  const auto chi = chi_b(u0);
  CHECK(chi.conductor() == 0);
  CHECK(testgen::close(chi.z(), -1.0));
  testgen::Gen g(22);
  for (std::int64_t p : {3, 5, 7}) {
    const auto F = Field::make(p, 6);
    for (int i = 0; i < 200; ++i) {
      const auto a = g.padic(F), b = g.padic(F);
      CHECK(testgen::close(chi_b(b).eval(a), static_cast<double>(hilbert(a, b))));
    }
  }
}

TEST_CASE("gauss sums: quadratic examples") {
  // quadratic characters of conductor 1: rotation 1/2 at the generator
  const auto q5 = MultChar::make(5, 1, Rotation::make(1, 2), 1.0);
  CHECK(testgen::close(gauss_sum(q5), std::sqrt(5.0)));
  const auto q3 = MultChar::make(3, 1, Rotation::make(1, 2), 1.0);
  CHECK(testgen::close(gauss_sum(q3), cplx(0.0, std::sqrt(3.0))));
  // the classical sum over squares gives the same numbers
  CHECK(testgen::close(classical_gauss(1, 5), std::sqrt(5.0)));
  CHECK(testgen::close(classical_gauss(1, 3), cplx(0.0, std::sqrt(3.0))));
}

TEST_CASE("gauss sums: absolute value and the chi(-1) relation") {
  testgen::Gen g(23);
  for (std::int64_t p : {3, 5, 7}) {
    const auto f = Field::make(p, 6);
    for (int n = 1; n <= 3; ++n)
      for (int i = 0; i < 6; ++i) {
        const auto chi = g.character(p, n, 1.0);
        const auto t = gauss_sum(chi);
        const double qn = std::pow(static_cast<double>(p), n);
        CHECK(std::abs(t) == doctest::Approx(std::sqrt(qn)).epsilon(1e-9));
        const auto minus_one = chi.eval(PadicNumber::from_integer(f, -1));
        CHECK(testgen::close(t * gauss_sum(chi.inverse()), minus_one * qn));
        // direct definition
        cplx direct = 0.0;
        const std::int64_t pn = f.pow_p(n);
        for (std::int64_t u = 1; u < pn; ++u) {
          if (u % p == 0) continue;
          direct += std::conj(chi.eval_unit(u)) *
                    std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(u) / static_cast<double>(pn));
        }
        CHECK(testgen::close(t, direct));
      }
  }
}

TEST_CASE("discrete log inverts the primitive root") {
  for (std::int64_t p : {3, 5, 7, 11}) {
    for (int n = 1; n <= 3; ++n) {
      const std::int64_t m = intmod::ipow(p, n);
      const std::int64_t g = primitive_root(p, n);
      // order is exactly phi(p^n)
      const std::int64_t phi = m / p * (p - 1);
      std::int64_t x = 1;
      for (std::int64_t k = 1; k < phi; ++k) {
        x = x * g % m;
        CHECK(x != 1);
      }
      for (std::int64_t u = 1; u < m; ++u) {
        if (u % p == 0) continue;
        CHECK(intmod::pow(g, discrete_log(u, p, n), m) == u);
      }
    }
  }
}

TEST_CASE("weil index: examples and classical Gauss sums") {
  const auto f5 = Field::make(5, 8);
  CHECK(testgen::close(mu_psi(PadicNumber::from_integer(f5, 5)), 1.0));
  for (std::int64_t p : {3, 5, 7, 11}) {
    const auto f = Field::make(p, 8);
    const auto u0 = smallest_nonresidue(p);
    INFO("p=" << p);
    CHECK(testgen::close(weil_index(PadicNumber::one(f)), 1.0));
    CHECK(testgen::close(mu_psi(PadicNumber::from_integer(f, u0)), 1.0));
    // v(a) = 1: normalized classical sum  p^{-1/2} sum e(u x^2 / p)
    for (std::int64_t u : {std::int64_t{1}, u0}) {
      const auto a = PadicNumber::make(f, 1, u);
      CHECK(testgen::close(weil_index(a), classical_gauss(u, p) / std::sqrt(static_cast<double>(p))));
    }
  }
}

TEST_CASE("weil index: eighth roots, square-class invariance, cocycle relation") {
  testgen::Gen g(24);
  for (std::int64_t p : {3, 5, 7}) {
    const auto f = Field::make(p, 8);
    for (int i = 0; i < 60; ++i) {
      const auto a = g.padic(f, -1, 1), b = g.padic(f, -1, 1);
      const auto ga = weil_index(a);
      CHECK(testgen::close(std::pow(ga, 8), 1.0));
      const auto t = g.unit(f);
      CHECK(testgen::close(weil_index(a * t * t), ga));
      CHECK(testgen::close(mu_psi(a * b), mu_psi(a) * mu_psi(b) * static_cast<double>(hilbert(a, b))));
    }
  }
}
