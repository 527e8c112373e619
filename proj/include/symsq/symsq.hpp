#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symsq/lfactor.hpp"
#include "symsq/local_symbols.hpp"
#include "symsq/tate.hpp"

namespace symsq {

/// Principal series Ind(chi1 x chi2) or Steinberg twisted by chi.
struct GL2Rep {
  enum class Kind { PrincipalSeries, Steinberg };
  Kind kind = Kind::PrincipalSeries;
  MultChar chi1, chi2;  // PS inducing data; chi1 is the Steinberg twist

  static GL2Rep principal_series(const MultChar& a, const MultChar& b) { return {Kind::PrincipalSeries, a, b}; }
  static GL2Rep steinberg(const MultChar& twist) { return {Kind::Steinberg, twist, twist}; }

  bool is_ps() const { return kind == Kind::PrincipalSeries; }
  std::int64_t p() const { return chi1.p(); }
  MultChar central_character() const;
  GL2Rep contragredient() const;
  GL2Rep twist(const MultChar& chi) const;
  // PS(chi1 nu^{u1}, chi2 nu^{u2})
  GL2Rep deform(cplx u1, cplx u2) const;
  // chi1/chi2 not in {nu, nu^{-1}}
  bool irreducible() const;
  // swap the inducing characters so that Re u1 >= Re u2 (u_i = -log_q |z_i|)
  GL2Rep langlands_ordered() const;
  std::string to_string() const;
};

struct WDSummand {
  int dim = 1;  // 1 = character, n >= 2 = sp(n) (x) chi
  MultChar chi;
};

struct WDParam {
  std::vector<WDSummand> summands;
  int dimension() const;
  std::string to_string() const;
};

WDParam llc(const GL2Rep& pi);
GL2Rep llc_inverse(const WDParam& rho);

WDParam artin_sym2(const WDParam& rho);
WDParam artin_wedge2(const WDParam& rho);
LFactor artin_L(const WDParam& rho);

LFactor sym2_L(const GL2Rep& pi);
bool equality_check(const GL2Rep& pi);

LFactor rs_L_pair(const GL2Rep& pi);  // L(s, pi x pi)
bool factorization_check(const GL2Rep& pi);

struct GeneralPosition {
  bool irreducible = false;     // (1)
  bool distinct = false;        // (2)
  bool sym2_disjoint = false;   // (3)
  bool cross_disjoint = false;  // (4)
  bool ok() const { return irreducible && distinct && sym2_disjoint && cross_disjoint; }
  std::string condition5 = "unchecked";
};
GeneralPosition general_position(const GL2Rep& pi, cplx u1, cplx u2);

struct Sym2Split {
  LFactor exceptional;
  LFactor regular;
};
Sym2Split sym2_decompose(const GL2Rep& pi, cplx u1, cplx u2);

// gamma(s, pi (x) chi, Sym^2, psi) as the product of three Tate gammas.
LaurentRational gamma_sym2(const GL2Rep& pi, const MultChar& twist, const AdditiveChar& psi);
// gamma_sym2 / gamma(2s - 1, omega^2, psi)
LaurentRational big_gamma(const GL2Rep& pi, const MultChar& twist, const AdditiveChar& psi);
// gamma(2s - 1, eta, psi) as a function of X
LaurentRational tate_gamma_2s_minus_1(const MultChar& eta, const AdditiveChar& psi);
// epsilon = gamma L(s) / L(1 - s, dual)
LaurentRational epsilon_sym2(const GL2Rep& pi, const MultChar& twist, const AdditiveChar& psi);

struct PlancherelResult {
  LaurentRational lhs, rhs;
  bool ok = false;
};
PlancherelResult plancherel_check(const MultChar& eta, const Field& f);

struct PsiDependence {
  bool unit = false;
  cplx c = 0.0;
  int k_x = 0;               // measured exponent of X = q^{-s/2}
  int k = 0;                 // the same monomial in q^{-s} (k_x / 2)
  int expected_k = 0;        // 3 v(a): |a|^{3(s - 1/2)}
  cplx tate_constant = 0.0;  // omega^3 chi^6 (a) |a|^{-3/2}
  cplx paper_constant = 0.0; // mu_{psi_a}(a)^{-1} times the above
  bool matches_tate = false;
  bool matches_paper = false;
  bool ok() const { return unit && k_x == 2 * expected_k; }
};
PsiDependence psi_dependence_check(const GL2Rep& pi, const MultChar& twist, const PadicNumber& a);

struct StabilityReport {
  int threshold = 0;
  int twist_conductor = 0;
  bool checked = false;  // false: below threshold, nothing asserted
  bool l_trivial = false;
  bool gamma_equal = false;
  bool epsilon_equal = false;
  double max_deviation = 0.0;
  std::string status;  // "pass", "fail", "unchecked"
};
int stability_threshold(const GL2Rep& pi, const GL2Rep& sigma);
StabilityReport stability_check(const GL2Rep& pi, const GL2Rep& sigma, const MultChar& twist, const Field& f);

// 16 sample points on vertical lines away from the poles of the batteries.
std::vector<cplx> sample_points();

}  // namespace symsq
