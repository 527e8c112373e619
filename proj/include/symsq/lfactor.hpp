#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "symsq/kernels.hpp"

namespace symsq {

inline constexpr double kRootTol = 1e-6;

// |a - b| <= tol * max(1, |a|, |b|)
bool roots_close(cplx a, cplx b, double tol = kRootTol);
// Multiset equality of root lists under roots_close.
bool same_roots(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol = kRootTol);
// Is every root of `small` (with multiplicity) present in `big`?
bool roots_divide(const std::vector<cplx>& small, const std::vector<cplx>& big, double tol = kRootTol);

/// prod (1 - alpha_i Y)^{-1} in Y = q^{-s}.
class LFactor {
 public:
  LFactor() = default;
  explicit LFactor(std::vector<cplx> inverse_roots) : roots_(std::move(inverse_roots)) {}
  static LFactor one() { return {}; }

  const std::vector<cplx>& inverse_roots() const { return roots_; }
  bool is_one() const { return roots_.empty(); }
  std::size_t degree() const { return roots_.size(); }

  // P(Y) = prod (1 - alpha Y), coefficients from Y^0 upward; P(0) = 1.
  std::vector<cplx> polynomial() const;
  cplx eval(cplx s, double q) const;

  friend LFactor operator*(const LFactor& a, const LFactor& b);
  bool equals(const LFactor& o, double tol = kRootTol) const { return same_roots(roots_, o.roots_, tol); }
  bool divides(const LFactor& o, double tol = kRootTol) const { return roots_divide(roots_, o.roots_, tol); }
  // "(1 - a q^{-s})^{-1}..." ; "1" when empty
  std::string render() const;

 private:
  std::vector<cplx> roots_;
};

LFactor lf_mul(const LFactor& a, const LFactor& b);
LFactor lf_lcm(const std::vector<LFactor>& factors, double tol = kRootTol);

/// c X^k prod(1 - a_i X) / prod(1 - b_j X) in X = q^{-s/2}; c == 0 is the
/// zero function.  Common numerator/denominator roots are cancelled.
class LaurentRational {
 public:
  LaurentRational() = default;
  LaurentRational(cplx c, int k, std::vector<cplx> num = {}, std::vector<cplx> den = {});

  static LaurentRational zero() { return LaurentRational(0.0, 0); }
  static LaurentRational unit(cplx c, int k) { return LaurentRational(c, k); }
  // 1 / L with Y = X^2, i.e. denominator roots +-sqrt(alpha)
  static LaurentRational from_lfactor(const LFactor& l);
  // sum_i coeffs[i] X^{low + i}; roots by companion matrix + Newton polish.
  static LaurentRational from_laurent_poly(int low, const std::vector<cplx>& coeffs);

  bool is_zero() const { return c_ == 0.0; }
  cplx unit_coeff() const { return c_; }
  int unit_exp() const { return k_; }
  const std::vector<cplx>& num_roots() const { return num_; }
  const std::vector<cplx>& den_roots() const { return den_; }
  bool is_unit() const { return !is_zero() && num_.empty() && den_.empty(); }
  // Expanded numerator/denominator coefficients (constant term 1).
  std::vector<cplx> num_coeffs() const;
  std::vector<cplx> den_coeffs() const;

  cplx eval_x(cplx x) const;
  cplx eval(cplx s, double q) const;  // X = q^{-s/2}

  // X -> c X^m, m in {+-1, +-2}
  LaurentRational substitute(cplx c, int m) const;
  // s -> 1 - s for residue cardinality q
  LaurentRational reflect(double q) const { return substitute(1.0 / std::sqrt(q), -1); }

  LaurentRational inverse() const;
  friend LaurentRational operator*(const LaurentRational& a, const LaurentRational& b);
  friend LaurentRational operator/(const LaurentRational& a, const LaurentRational& b);

  // Same unit (within tol) and the same root multisets.
  bool equals(const LaurentRational& o, double tol = 1e-8) const;
  // Coefficientwise comparison of the normalized (unit, num, den) expansions.
  bool coeff_equals(const LaurentRational& o, double tol = 1e-8) const;
  std::string render() const;

 private:
  void cancel();
  cplx c_ = 1.0;
  int k_ = 0;
  std::vector<cplx> num_, den_;
};

struct UnitRatio {
  cplx c;
  int k;
};
// A / B == c X^k ?
std::optional<UnitRatio> lr_ratio_is_unit(const LaurentRational& a, const LaurentRational& b);
cplx lr_eval(const LaurentRational& a, cplx s, double q);

// Roots of sum coeffs[i] x^i (leading coefficient nonzero).
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs);
// prod (1 - r x) expanded from x^0 upward.
std::vector<cplx> expand_inverse_roots(const std::vector<cplx>& roots);

}  // namespace symsq
