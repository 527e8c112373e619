#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "symsq/lfactor.hpp"

using namespace symsq;

namespace {

std::vector<cplx> random_roots(testgen::Gen& g, int n) {
  std::vector<cplx> r;
  for (int i = 0; i < n; ++i) r.push_back(g.nonzero_complex());
  return r;
}

}  // namespace

TEST_CASE("lfactor: products and lcm examples") {
  const cplx a = 0.5, b = cplx(0.2, 0.7);
  CHECK(lf_mul(LFactor({1.0}), LFactor::one()).equals(LFactor({1.0})));
  CHECK(lf_mul(LFactor({a}), LFactor({b})).equals(LFactor({a, b})));
  CHECK(lf_mul(LFactor({1.0}), LFactor({1.0})).degree() == 2);
  CHECK(lf_lcm({LFactor({a}), LFactor({a})}).equals(LFactor({a})));
  CHECK(lf_lcm({LFactor({a}), LFactor({b})}).equals(LFactor({a, b})));
  CHECK(lf_lcm({LFactor({1.0, b}), LFactor({1.0})}).equals(LFactor({1.0, b})));
  CHECK(LFactor::one().render() == "1");
}

TEST_CASE("lfactor: evaluation examples") {
  const auto L = LFactor({1.0});
  CHECK(testgen::close(L.eval(2.0, 5.0), 25.0 / 24.0));
  CHECK(testgen::close(lr_eval(LaurentRational::from_lfactor(L), 2.0, 5.0), 25.0 / 24.0));
  const cplx c(0.3, -1.7);
  CHECK(testgen::close(lr_eval(LaurentRational::unit(c, 5), 0.0, 7.0), c));
  // P(Y) = prod (1 - alpha Y), constant term 1
  const auto P = LFactor({2.0, 3.0}).polynomial();
  REQUIRE(P.size() == 3);
  CHECK(testgen::close(P[0], 1.0));
  CHECK(testgen::close(P[1], -5.0));
  CHECK(testgen::close(P[2], 6.0));
}

TEST_CASE("lfactor: unit ratios") {
  const auto B = LaurentRational(1.0, 0, {0.3}, {0.9, cplx(0.1, 0.2)});
  auto r = lr_ratio_is_unit(B, B);
  REQUIRE(r);
  CHECK(testgen::close(r->c, 1.0));
  CHECK(r->k == 0);
  r = lr_ratio_is_unit(LaurentRational::unit(1.0, 2) * B, B);
  REQUIRE(r);
  CHECK(testgen::close(r->c, 1.0));
  CHECK(r->k == 2);
  // same roots, shifted monomial and a constant
  r = lr_ratio_is_unit(LaurentRational(2.5, -3, {0.3}, {0.9, cplx(0.1, 0.2)}), B);
  REQUIRE(r);
  CHECK(testgen::close(r->c, 2.5));
  CHECK(r->k == -3);
  CHECK_FALSE(lr_ratio_is_unit(LaurentRational(1.0, 0, {0.31}, {0.9, cplx(0.1, 0.2)}), B));
}

TEST_CASE("lfactor: lcm is idempotent, commutative, associative and divisible") {
  testgen::Gen g(41);
  for (int i = 0; i < 200; ++i) {
    // draw roots from a small pool so that coincidences happen
    const auto pool = random_roots(g, 4);
    auto pick = [&] {
      std::vector<cplx> r;
      const int n = static_cast<int>(g.range(0, 4));
      for (int j = 0; j < n; ++j) r.push_back(pool[g.range(0, 3)]);
      return LFactor(r);
    };
    const auto A = pick(), B = pick(), C = pick();
    const auto ab = lf_lcm({A, B});
    CHECK(lf_lcm({A, A}).equals(A));
    CHECK(ab.equals(lf_lcm({B, A})));
    CHECK(lf_lcm({ab, C}).equals(lf_lcm({A, lf_lcm({B, C})})));
    CHECK(A.divides(ab));
    CHECK(B.divides(ab));
    CHECK(ab.divides(A * B));
    // multiplicity is the max over inputs
    for (const auto& x : pool) {
      auto count = [&](const LFactor& l) {
        return std::count_if(l.inverse_roots().begin(), l.inverse_roots().end(),
                             [&](cplx y) { return roots_close(x, y); });
      };
      CHECK(count(ab) == std::max(count(A), count(B)));
    }
  }
}

TEST_CASE("lfactor: clustering is stable under tiny perturbations") {
  testgen::Gen g(42);
  for (int i = 0; i < 200; ++i) {
    const auto r = random_roots(g, 3);
    auto moved = r;
    for (auto& x : moved) x += std::polar(1e-10, 6.28 * g.uniform());
    CHECK(LFactor(r).equals(LFactor(moved)));
    CHECK(lf_lcm({LFactor(r), LFactor(moved)}).degree() == 3);
  }
}

TEST_CASE("laurent: embedding of L-factors is multiplicative") {
  testgen::Gen g(43);
  for (int i = 0; i < 200; ++i) {
    const LFactor A(random_roots(g, static_cast<int>(g.range(0, 3))));
    const LFactor B(random_roots(g, static_cast<int>(g.range(0, 3))));
    const auto lhs = LaurentRational::from_lfactor(A * B);
    const auto rhs = LaurentRational::from_lfactor(A) * LaurentRational::from_lfactor(B);
    CHECK(lhs.equals(rhs));
    const cplx s(0.37, 1.3 * g.uniform());
    CHECK(testgen::close(lhs.eval(s, 5.0), A.eval(s, 5.0) * B.eval(s, 5.0), 1e-8));
  }
}

TEST_CASE("laurent: arithmetic, substitution and cross-evaluation") {
  testgen::Gen g(44);
  for (int i = 0; i < 200; ++i) {
    const LaurentRational a(g.nonzero_complex(), static_cast<int>(g.range(-3, 3)), random_roots(g, 2), random_roots(g, 1));
    const LaurentRational b(g.nonzero_complex(), static_cast<int>(g.range(-3, 3)), random_roots(g, 1), random_roots(g, 2));
    const cplx x = std::polar(0.4 + 0.3 * g.uniform(), 6.28 * g.uniform());
    CHECK(testgen::close((a * b).eval_x(x), a.eval_x(x) * b.eval_x(x), 1e-7));
    CHECK(testgen::close((a / b).eval_x(x), a.eval_x(x) / b.eval_x(x), 1e-7));
    CHECK((a * a.inverse()).equals(LaurentRational::unit(1.0, 0)));
    const double q = 7.0;
    const cplx s(0.25, 2.0 * g.uniform());
    CHECK(testgen::close(a.reflect(q).eval(s, q), a.eval(1.0 - s, q), 1e-7));
    // the same function rebuilt from its expanded Laurent polynomial
    const LaurentRational poly(a.unit_coeff(), a.unit_exp(), a.num_roots());
    auto coeffs = poly.num_coeffs();
    for (auto& c : coeffs) c *= poly.unit_coeff();
    const auto rebuilt = LaurentRational::from_laurent_poly(poly.unit_exp(), coeffs);
    CHECK(rebuilt.equals(poly, 1e-7));
  }
}

TEST_CASE("poly_roots recovers expanded roots") {
  testgen::Gen g(45);
  for (int i = 0; i < 100; ++i) {
    const auto r = random_roots(g, static_cast<int>(g.range(1, 6)));
    const auto coeffs = expand_inverse_roots(r);  // prod (1 - r x): roots are 1/r
    std::vector<cplx> inv;
    for (auto x : r) inv.push_back(1.0 / x);
    CHECK(same_roots(poly_roots(coeffs), inv));
  }
}
