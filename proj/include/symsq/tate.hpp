#pragma once

#include <vector>

#include "symsq/lfactor.hpp"
#include "symsq/local_symbols.hpp"

namespace symsq {

/// sum_i c_i 1_{a_i + p^{k_i}}; a_i == 0 (or v(a_i) >= k_i) is the ideal p^{k_i}.
class SchwartzFn {
 public:
  struct Term {
    PadicNumber a;
    int k = 0;
    cplx c = 1.0;
  };

  SchwartzFn() = default;
  explicit SchwartzFn(std::vector<Term> terms) : terms_(std::move(terms)) {}
  static SchwartzFn indicator(const PadicNumber& a, int k) { return SchwartzFn({{a, k, 1.0}}); }
  static SchwartzFn ideal(const Field& f, int k) { return indicator(PadicNumber::zero(f), k); }

  const std::vector<Term>& terms() const { return terms_; }
  cplx operator()(const PadicNumber& x) const;
  // Merge into disjoint cosets of a common level; drops zero coefficients.
  SchwartzFn reduced() const;

 private:
  std::vector<Term> terms_;
};

// Fourier transform with respect to psi, using the measure self-dual for psi
// (vol(O) = 1 when the conductor is 0).
SchwartzFn fourier(const SchwartzFn& phi, const AdditiveChar& psi);

// Z(s, phi, chi) = int phi(x) chi(x) |x|^s d^x x as a function of X = q^{-s/2},
// vol(O^x, d^x x) = (q - 1)/q.
LaurentRational tate_zeta(const SchwartzFn& phi, const MultChar& chi, const Field& f);

struct TateTriple {
  LFactor L;
  LaurentRational epsilon;
  LaurentRational gamma;
};

LFactor tate_L(const MultChar& chi);
LaurentRational tate_epsilon(const MultChar& chi, const AdditiveChar& psi);
LaurentRational tate_gamma(const MultChar& chi, const AdditiveChar& psi);
TateTriple tate_triple(const MultChar& chi, const AdditiveChar& psi);

struct GammaOracle {
  LaurentRational gamma;
  bool consistent = false;  // all test functions gave the same gamma
  int test_functions = 0;   // functions with non-vanishing zeta integral
};
GammaOracle tate_gamma_oracle(const MultChar& chi, const AdditiveChar& psi, const Field& f);

// unit u with gamma(s, chi, psi_a) = u gamma(s, chi, psi): chi(a) |a|^{s - 1/2}
LaurentRational tate_psi_scaling(const MultChar& chi, const PadicNumber& a);

// c with v(c) = -n(xi) and xi(1 + x) = psi(c x) on p^{ceil(n/2)}.
PadicNumber stability_constant(const MultChar& xi, const Field& f);

}  // namespace symsq
