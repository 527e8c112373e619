#include <doctest.h>

#include "gen.hpp"
#include "symsq/symsq.hpp"

using namespace symsq;

namespace {

// Tate L-factors multiplied out by hand: the Sym^2 L-factor of PS(chi1, chi2)
// is L(chi1^2) L(chi1 chi2) L(chi2^2), each 1 when ramified.
std::vector<cplx> sym2_roots_by_hand(const MultChar& a, const MultChar& b) {
  std::vector<cplx> r;
  for (const auto& c : {a * a, a * b, b * b})
    if (!c.ramified()) r.push_back(c.z());
  return r;
}

bool unit_one(const LaurentRational& x, const LaurentRational& y) {
  const auto r = lr_ratio_is_unit(x, y);
  return r && r->k == 0 && testgen::close(r->c, 1.0, 1e-8);
}

}  // namespace

TEST_CASE("llc and the Artin side: examples") {
  const std::int64_t p = 5;
  const double q = 5.0;
  const auto one = MultChar::trivial(p);
  const auto a = MultChar::unramified(p, 0.4), b = MultChar::unramified(p, cplx(0.1, 0.8));

  const auto rho = llc(GL2Rep::principal_series(a, b));
  REQUIRE(rho.summands.size() == 2);
  CHECK(rho.dimension() == 2);
  CHECK(llc_inverse(rho).chi1.equals(a));
  CHECK(llc_inverse(rho).chi2.equals(b));

  const auto st = llc(GL2Rep::steinberg(one));
  REQUIRE(st.summands.size() == 1);
  CHECK(st.summands[0].dim == 2);
  CHECK(llc_inverse(st).kind == GL2Rep::Kind::Steinberg);

  const auto s2 = artin_sym2(llc(GL2Rep::principal_series(one, one)));
  CHECK(s2.dimension() == 3);
  CHECK(artin_L(s2).equals(LFactor({1.0, 1.0, 1.0})));

  const auto sp3 = artin_sym2(st);
  REQUIRE(sp3.summands.size() == 1);
  CHECK(sp3.summands[0].dim == 3);
  CHECK(artin_L(sp3).equals(LFactor({1.0 / q})));

  const auto w = artin_wedge2(llc(GL2Rep::principal_series(a, a.inverse())));
  REQUIRE(w.summands.size() == 1);
  CHECK(w.summands[0].chi.equals(one));
  // det of sp(2) (x) chi with Frobenius weights q^{+-1/2}: chi^2
  const auto chi = MultChar::unramified(p, cplx(0.3, 0.5));
  const auto w2 = artin_wedge2(llc(GL2Rep::steinberg(chi)));
  REQUIRE(w2.summands.size() == 1);
  CHECK(w2.summands[0].chi.equals(chi * chi));

  CHECK(artin_L(WDParam{{{1, MultChar::make(p, 1, Rotation::make(1, 4), 1.0)}}}).is_one());
  CHECK_THROWS(artin_sym2(s2));
}

TEST_CASE("sym2 L: examples") {
  for (std::int64_t p : {3, 5, 7}) {
    const double q = testgen::qd(p);
    const auto one = MultChar::trivial(p);
    CHECK(sym2_L(GL2Rep::principal_series(one, one)).equals(LFactor({1.0, 1.0, 1.0})));
    const cplx z(0.6, 0.3);
    const auto chi = MultChar::unramified(p, z);
    CHECK(sym2_L(GL2Rep::principal_series(chi, chi.inverse())).equals(LFactor({1.0, z * z, 1.0 / (z * z)})));
    CHECK(sym2_L(GL2Rep::steinberg(one)).equals(LFactor({1.0 / q})));
  }
}

TEST_CASE("sym2 L: product formula, equality with the Artin side, factorization") {
  testgen::Gen g(61);
  for (std::int64_t p : {3, 5, 7}) {
    for (int i = 0; i < 150; ++i) {
      const auto a = g.character(p), b = g.character(p);
      const auto pi = GL2Rep::principal_series(a, b);
      CHECK(sym2_L(pi).equals(LFactor(sym2_roots_by_hand(a, b))));
      CHECK(equality_check(pi));
      CHECK(factorization_check(pi));
      CHECK(rs_L_pair(pi).equals(tate_L(pi.central_character()) * sym2_L(pi)));
      CHECK(equality_check(GL2Rep::steinberg(a)));
      // symmetric in the inducing characters
      CHECK(sym2_L(GL2Rep::principal_series(b, a)).equals(sym2_L(pi)));
    }
  }
}

TEST_CASE("general position: examples") {
  const auto one = MultChar::trivial(5);
  const auto pi = GL2Rep::principal_series(one, one);
  CHECK_FALSE(general_position(pi, 0.0, 0.0).distinct);
  const auto gp = general_position(pi, 0.3, 0.11);
  CHECK(gp.irreducible);
  CHECK(gp.distinct);
  CHECK(gp.sym2_disjoint);
  CHECK(gp.cross_disjoint);
  CHECK(gp.ok());
  CHECK(gp.condition5 == "unchecked");
  CHECK_FALSE(general_position(pi, 1.2, 0.2).irreducible);
  CHECK_FALSE(general_position(pi, 0.2, 1.2).irreducible);
}

TEST_CASE("exceptional / regular decomposition") {
  const std::int64_t p = 5;
  const auto one = MultChar::trivial(p);
  const auto generic = sym2_decompose(GL2Rep::principal_series(one, one), 0.3, 0.11);
  CHECK(generic.exceptional.degree() == 1);
  CHECK(generic.regular.degree() == 2);
  // order-4 character: chi^2 ramified quadratic, chi chi^{-1} trivial
  const auto eta = MultChar::make(p, 1, Rotation::make(1, 4), 1.0);
  const auto both = sym2_decompose(GL2Rep::principal_series(eta, eta.inverse()), 0.3, 0.11);
  CHECK(both.regular.is_one());
  CHECK(both.exceptional.degree() == 1);
  CHECK_THROWS_AS(sym2_decompose(GL2Rep::principal_series(one, one), 0.0, 0.0), PreconditionFailure);

  testgen::Gen g(62);
  for (std::int64_t pp : {3, 5, 7})
    for (int i = 0; i < 200; ++i) {
      const auto pi = g.ps(pp);
      const cplx u1(g.uniform() - 0.5, g.uniform()), u2(g.uniform() - 0.5, g.uniform());
      if (!general_position(pi, u1, u2).ok()) continue;
      const auto d = sym2_decompose(pi, u1, u2);
      CHECK((d.exceptional * d.regular).equals(sym2_L(pi.deform(u1, u2))));
    }
}

TEST_CASE("sym2 gamma: functional equation, symmetry, epsilon, big gamma") {
  testgen::Gen g(63);
  for (std::int64_t p : {3, 5, 7}) {
    const auto f = Field::make(p, 8);
    const auto psi = AdditiveChar::standard(f);
    const double q = testgen::qd(p);
    for (int i = 0; i < 40; ++i) {
      const auto a = g.character(p), b = g.character(p), t = g.character(p, 1);
      const auto pi = GL2Rep::principal_series(a, b);
      const auto gam = gamma_sym2(pi, t, psi);
      const auto dual = gamma_sym2(pi.contragredient(), t.inverse(), psi.inverse()).reflect(q);
      CHECK((gam * dual).equals(LaurentRational::unit(1.0, 0)));
      CHECK(unit_one(gamma_sym2(GL2Rep::principal_series(b, a), t, psi), gam));
      CHECK(epsilon_sym2(pi, t, psi).is_unit());
      const auto w2 = (pi.central_character() * t * t).pow(2);
      CHECK((big_gamma(pi, t, psi) * tate_gamma_2s_minus_1(w2, psi)).equals(gam));
    }
  }
}

TEST_CASE("plancherel identity") {
  testgen::Gen g(64);
  const auto f5 = Field::make(5, 8);
  CHECK(plancherel_check(MultChar::trivial(5), f5).ok);
  CHECK(plancherel_check(MultChar::make(5, 1, Rotation::make(1, 2), 1.0), f5).ok);
  for (std::int64_t p : {3, 5, 7}) {
    const auto f = Field::make(p, 8);
    for (int i = 0; i < 20; ++i) CHECK(plancherel_check(g.character(p), f).ok);
  }
}

TEST_CASE("psi dependence") {
  testgen::Gen g(65);
  for (std::int64_t p : {3, 5, 7}) {
    const auto f = Field::make(p, 8);
    for (int i = 0; i < 20; ++i) {
      const auto pi = g.ps(p);
      const auto t = g.character(p, 1);
      const auto r1 = psi_dependence_check(pi, t, PadicNumber::one(f));
      CHECK(r1.ok());
      CHECK(r1.k == 0);
      CHECK(testgen::close(r1.c, 1.0));
      const auto u = g.unit(f);
      const auto rs = psi_dependence_check(pi, t, u * u);
      CHECK(rs.ok());
      const auto om = pi.central_character();
      CHECK(testgen::close(rs.c, std::pow(om.eval(u * u), 3) * std::pow(t.eval(u * u), 6), 1e-8));
      CHECK(rs.matches_tate);
      const auto rp = psi_dependence_check(pi, t, PadicNumber::uniformizer_power(f, 1));
      CHECK(rp.unit);
      CHECK(rp.k == 3);
      CHECK(rp.k_x == 6);
      CHECK(rp.matches_tate);
    }
  }
}

TEST_CASE("stability: worked example and threshold") {
  const std::int64_t p = 5;
  const auto f = Field::make(p, 10);
  testgen::Gen g(66);
  const auto eta = MultChar::make(p, 1, Rotation::make(1, 2), 1.0);
  const auto one = MultChar::trivial(p);
  const auto pi = GL2Rep::principal_series(eta, eta.inverse());
  const auto sigma = GL2Rep::principal_series(one, one);
  const auto r = stability_check(pi, sigma, g.character(p, 3, 1.0), f);
  CHECK(r.checked);
  CHECK(r.status == "pass");
  CHECK(r.l_trivial);
  CHECK(r.gamma_equal);
  CHECK(r.epsilon_equal);
  CHECK(r.max_deviation < 1e-8);

  const auto below = stability_check(pi, sigma, MultChar::unramified(p, g.unimodular()), f);
  CHECK_FALSE(below.checked);
  CHECK(below.status == "unchecked");

  CHECK_THROWS_AS(stability_check(pi, GL2Rep::principal_series(eta, one), g.character(p, 3, 1.0), f),
                  PreconditionFailure);
}

TEST_CASE("stability: random pairs with equal central characters") {
  testgen::Gen g(67);
  for (std::int64_t p : {3, 5, 7}) {
    const auto f = Field::make(p, 12);
    int checked = 0;
    for (int i = 0; i < 30; ++i) {
      const auto a = g.character(p, 1), b = g.character(p, 1), c = g.character(p, 1);
      const auto pi = GL2Rep::principal_series(a, b);
      const auto sigma = GL2Rep::principal_series(c, a * b * c.inverse());
      const int th = stability_threshold(pi, sigma);
      if (th > 5) continue;
      const auto r = stability_check(pi, sigma, g.character(p, th, 1.0), f);
      if (!r.checked) continue;
      ++checked;
      CHECK(r.status == "pass");
    }
    CHECK(checked > 0);
  }
}
