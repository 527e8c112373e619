#include "symsq/symsq.hpp"

#include <cmath>

namespace symsq {

namespace {

double qf(std::int64_t p) { return static_cast<double>(p); }

bool disjoint(const LFactor& a, const LFactor& b) {
  for (const cplx& x : a.inverse_roots())
    for (const cplx& y : b.inverse_roots())
      if (roots_close(x, y)) return false;
  return true;
}

void require_ps(const GL2Rep& pi, const char* what) {
  if (!pi.is_ps()) throw UnsupportedInput(std::string(what) + ": principal series only");
}

double real_exponent(const MultChar& chi) { return -std::log(std::abs(chi.z())) / std::log(qf(chi.p())); }

}  // namespace

// ---- representations ------------------------------------------------------------

MultChar GL2Rep::central_character() const { return is_ps() ? chi1 * chi2 : chi1.pow(2); }

GL2Rep GL2Rep::contragredient() const { return {kind, chi1.inverse(), chi2.inverse()}; }

GL2Rep GL2Rep::twist(const MultChar& chi) const { return {kind, chi1 * chi, chi2 * chi}; }

GL2Rep GL2Rep::deform(cplx u1, cplx u2) const {
  require_ps(*this, "deform");
  return principal_series(chi1.deform(u1), chi2.deform(u2));
}

bool GL2Rep::irreducible() const {
  if (!is_ps()) return true;
  const MultChar ratio = chi1 * chi2.inverse();
  const MultChar nu = MultChar::nu(p());
  return !ratio.equals(nu) && !ratio.equals(nu.inverse());
}

GL2Rep GL2Rep::langlands_ordered() const {
  if (!is_ps() || real_exponent(chi1) >= real_exponent(chi2)) return *this;
  return principal_series(chi2, chi1);
}

std::string GL2Rep::to_string() const {
  if (is_ps()) return "PS(" + chi1.to_string() + ", " + chi2.to_string() + ")";
  return "St(" + chi1.to_string() + ")";
}

int WDParam::dimension() const {
  int d = 0;
  for (const auto& s : summands) d += s.dim;
  return d;
}

std::string WDParam::to_string() const {
  std::string s;
  for (const auto& x : summands) {
    if (!s.empty()) s += " + ";
    s += x.dim == 1 ? x.chi.to_string() : "sp(" + std::to_string(x.dim) + ")x" + x.chi.to_string();
  }
  return s.empty() ? "0" : s;
}

// ---- Langlands / Artin side ------------------------------------------------------

WDParam llc(const GL2Rep& pi) {
  if (pi.is_ps()) return {{{1, pi.chi1}, {1, pi.chi2}}};
  return {{{2, pi.chi1}}};
}

GL2Rep llc_inverse(const WDParam& rho) {
  if (rho.summands.size() == 2 && rho.summands[0].dim == 1 && rho.summands[1].dim == 1)
    return GL2Rep::principal_series(rho.summands[0].chi, rho.summands[1].chi);
  if (rho.summands.size() == 1 && rho.summands[0].dim == 2) return GL2Rep::steinberg(rho.summands[0].chi);
  throw UnsupportedInput("llc_inverse: parameter outside PS / Steinberg families");
}

WDParam artin_sym2(const WDParam& rho) {
  if (rho.dimension() != 2) throw DomainError("artin_sym2: parameter must be 2-dimensional");
  if (rho.summands.size() == 2) {
    const MultChar& a = rho.summands[0].chi;
    const MultChar& b = rho.summands[1].chi;
    return {{{1, a.pow(2)}, {1, a * b}, {1, b.pow(2)}}};
  }
  return {{{3, rho.summands[0].chi.pow(2)}}};
}

WDParam artin_wedge2(const WDParam& rho) {
  if (rho.dimension() != 2) throw DomainError("artin_wedge2: parameter must be 2-dimensional");
  if (rho.summands.size() == 2) return {{{1, rho.summands[0].chi * rho.summands[1].chi}}};
  // det(sp(2) (x) chi) = chi^2: the Frobenius weights q^{+-1/2} cancel
  return {{{1, rho.summands[0].chi.pow(2)}}};
}

LFactor artin_L(const WDParam& rho) {
  LFactor out;
  for (const auto& s : rho.summands) {
    if (s.dim == 1) {
      out = out * tate_L(s.chi);
    } else if (!s.chi.ramified()) {
      // monodromy invariants: the line of Frobenius weight nu^{(n-1)/2}
      out = out * tate_L(s.chi.deform(0.5 * (s.dim - 1)));
    }
  }
  return out;
}

// ---- Sym^2 L-factors -------------------------------------------------------------

LFactor sym2_L(const GL2Rep& pi) {
  if (!pi.is_ps()) return artin_L({{{3, pi.chi1.pow(2)}}});
  return tate_L(pi.chi1 * pi.chi2) * tate_L(pi.chi1.pow(2)) * tate_L(pi.chi2.pow(2));
}

bool equality_check(const GL2Rep& pi) { return sym2_L(pi).equals(artin_L(artin_sym2(llc(pi)))); }

LFactor rs_L_pair(const GL2Rep& pi) {
  require_ps(pi, "rs_L_pair");
  LFactor out;
  for (const MultChar* a : {&pi.chi1, &pi.chi2})
    for (const MultChar* b : {&pi.chi1, &pi.chi2}) out = out * tate_L(*a * *b);
  return out;
}

bool factorization_check(const GL2Rep& pi) {
  return rs_L_pair(pi).equals(tate_L(pi.central_character()) * sym2_L(pi));
}

GeneralPosition general_position(const GL2Rep& pi, cplx u1, cplx u2) {
  require_ps(pi, "general_position");
  const MultChar c1 = pi.chi1.deform(u1), c2 = pi.chi2.deform(u2);
  const LFactor l1 = tate_L(c1.pow(2)), l2 = tate_L(c2.pow(2)), l12 = tate_L(c1 * c2);
  GeneralPosition g;
  g.irreducible = GL2Rep::principal_series(c1, c2).irreducible();
  g.distinct = !c1.equals(c2);
  g.sym2_disjoint = disjoint(l1, l2);
  g.cross_disjoint = disjoint(l1, l12) && disjoint(l2, l12);
  return g;
}

Sym2Split sym2_decompose(const GL2Rep& pi, cplx u1, cplx u2) {
  const GeneralPosition g = general_position(pi, u1, u2);
  if (!g.ok()) throw PreconditionFailure("sym2_decompose: deformation point not in general position");
  const MultChar c1 = pi.chi1.deform(u1), c2 = pi.chi2.deform(u2);
  return {tate_L(c1 * c2), lf_lcm({tate_L(c1.pow(2)), tate_L(c2.pow(2))})};
}

// ---- gamma factors ---------------------------------------------------------------

LaurentRational gamma_sym2(const GL2Rep& pi, const MultChar& twist, const AdditiveChar& psi) {
  require_ps(pi, "gamma_sym2");
  const GL2Rep t = pi.twist(twist);
  // chi_i (x) twist squared: (chi1 chi2 chi^2), (chi1 chi)^2, (chi2 chi)^2
  return tate_gamma(t.chi1 * t.chi2, psi) * tate_gamma(t.chi1.pow(2), psi) * tate_gamma(t.chi2.pow(2), psi);
}

LaurentRational tate_gamma_2s_minus_1(const MultChar& eta, const AdditiveChar& psi) {
  // s -> 2s - 1 is X -> q^{1/2} X^2
  return tate_gamma(eta, psi).substitute(std::sqrt(qf(eta.p())), 2);
}

LaurentRational big_gamma(const GL2Rep& pi, const MultChar& twist, const AdditiveChar& psi) {
  const MultChar omega = pi.twist(twist).central_character();
  return gamma_sym2(pi, twist, psi) / tate_gamma_2s_minus_1(omega.pow(2), psi);
}

LaurentRational epsilon_sym2(const GL2Rep& pi, const MultChar& twist, const AdditiveChar& psi) {
  const double q = qf(pi.p());
  const LaurentRational l = LaurentRational::from_lfactor(sym2_L(pi.twist(twist)));
  const LaurentRational ld =
      LaurentRational::from_lfactor(sym2_L(pi.contragredient().twist(twist.inverse()))).reflect(q);
  return gamma_sym2(pi, twist, psi) * l / ld;
}

PlancherelResult plancherel_check(const MultChar& eta, const Field& f) {
  const double q = qf(f.p);
  const MultChar e2 = eta.pow(2), em2 = eta.pow(-2);
  const AdditiveChar psi = AdditiveChar::standard(f);
  auto L = [](const MultChar& c) { return LaurentRational::from_lfactor(tate_L(c)); };
  const LaurentRational cond = LaurentRational::unit(std::pow(q, -e2.conductor()), 0);
  PlancherelResult r;
  // q^{-f(eta^2)} L(s, eta^-2) L(-s, eta^2) / (L(1-s, eta^2) L(1+s, eta^-2))
  r.lhs = cond * L(em2) * L(e2).substitute(1.0, -1) / (L(e2).reflect(q) * L(em2).substitute(1.0 / std::sqrt(q), 1));
  // gamma(s, eta^-2, psi)^-1 gamma(-s, eta^2, psi^-1)^-1
  r.rhs = (tate_gamma(em2, psi) * tate_gamma(e2, psi.inverse()).substitute(1.0, -1)).inverse();
  r.ok = r.lhs.coeff_equals(r.rhs, 1e-8);
  return r;
}

PsiDependence psi_dependence_check(const GL2Rep& pi, const MultChar& twist, const PadicNumber& a) {
  const Field& f = a.field();
  const AdditiveChar psi = AdditiveChar::standard(f);
  const AdditiveChar psi_a = AdditiveChar::scaled(a);
  PsiDependence d;
  d.expected_k = 3 * a.valuation();
  const auto ratio = lr_ratio_is_unit(gamma_sym2(pi, twist, psi_a), gamma_sym2(pi, twist, psi));
  if (ratio) {
    d.unit = true;
    d.c = ratio->c;
    d.k_x = ratio->k;
    d.k = ratio->k / 2;
  }
  const double q = qf(f.p);
  d.tate_constant = std::pow(pi.central_character().eval(a), 3) * std::pow(twist.eval(a), 6) *
                    std::pow(q, 1.5 * a.valuation());
  const cplx mu_a = mu_psi(a) * static_cast<double>(hilbert(a, a));  // mu_{psi_a}(a)
  d.paper_constant = d.tate_constant / mu_a;
  d.matches_tate = d.unit && approx_equal(d.c, d.tate_constant, 1e-8 * std::max(1.0, std::abs(d.c)));
  d.matches_paper = d.unit && approx_equal(d.c, d.paper_constant, 1e-8 * std::max(1.0, std::abs(d.c)));
  return d;
}

int stability_threshold(const GL2Rep& pi, const GL2Rep& sigma) {
  int m = pi.central_character().conductor();
  for (const GL2Rep* r : {&pi, &sigma}) {
    m = std::max(m, (r->chi1 * r->chi2).conductor());
    m = std::max(m, r->chi1.pow(2).conductor());
    m = std::max(m, r->chi2.pow(2).conductor());
  }
  return 2 * m + 1;
}

std::vector<cplx> sample_points() {
  std::vector<cplx> s;
  for (double re : {0.23, 0.61, 1.17, -0.41})
    for (double im : {0.1, 0.77, 1.9, 3.1}) s.emplace_back(re, im);
  return s;
}

StabilityReport stability_check(const GL2Rep& pi, const GL2Rep& sigma, const MultChar& twist, const Field& f) {
  require_ps(pi, "stability_check");
  require_ps(sigma, "stability_check");
  if (!pi.central_character().equals(sigma.central_character()))
    throw PreconditionFailure("stability_check: central characters differ");
  StabilityReport r;
  r.threshold = stability_threshold(pi, sigma);
  r.twist_conductor = twist.conductor();
  if (twist.conductor() < r.threshold || twist.pow(2).conductor() < r.threshold) {
    r.status = "unchecked";
    return r;
  }
  r.checked = true;
  const double q = qf(f.p);
  const AdditiveChar psi = AdditiveChar::standard(f);
  r.l_trivial = sym2_L(pi.twist(twist)).is_one() && sym2_L(sigma.twist(twist)).is_one();
  const LaurentRational gp = gamma_sym2(pi, twist, psi), gs = gamma_sym2(sigma, twist, psi);
  const LaurentRational ep = epsilon_sym2(pi, twist, psi), es = epsilon_sym2(sigma, twist, psi);
  r.gamma_equal = r.epsilon_equal = true;
  for (const cplx& s : sample_points()) {
    const double dg = std::abs(gp.eval(s, q) / gs.eval(s, q) - 1.0);
    const double de = std::abs(ep.eval(s, q) / es.eval(s, q) - 1.0);
    r.max_deviation = std::max({r.max_deviation, dg, de});
    if (dg > 1e-8) r.gamma_equal = false;
    if (de > 1e-8) r.epsilon_equal = false;
  }
  r.status = r.l_trivial && r.gamma_equal && r.epsilon_equal ? "pass" : "fail";
  return r;
}

}  // namespace symsq
