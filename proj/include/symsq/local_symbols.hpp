#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symsq/kernels.hpp"
#include "symsq/padic.hpp"

namespace symsq {

inline constexpr double kTol = 1e-9;

bool approx_equal(cplx a, cplx b, double tol = kTol);

/// Element of Q/Z kept in lowest terms with 0 <= num < den.
struct Rotation {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rotation make(std::int64_t num, std::int64_t den);
  static Rotation parse(const std::string& s);  // "a/b" or "a"

  Rotation operator+(const Rotation& o) const;
  Rotation operator-() const;
  Rotation times(std::int64_t k) const;
  bool is_zero() const { return num == 0; }
  cplx value() const;  // e^{2 pi i num/den}
  std::string to_string() const;
  bool operator==(const Rotation&) const = default;
};

/// Smallest positive primitive root modulo p^n (n >= 1).
std::int64_t primitive_root(std::int64_t p, int n);
/// Discrete log of u to base primitive_root(p, n) modulo p^n; cached tables.
std::int64_t discrete_log(std::int64_t u, std::int64_t p, int n);

/// x -> psi(b x) for the fixed unramified psi(x) = e(frac x).  The default
/// (b = 1) has conductor 0; psi^{-1} is scale -1.
class AdditiveChar {
 public:
  AdditiveChar() = default;
  static AdditiveChar standard(const Field& f) { return AdditiveChar(PadicNumber::one(f)); }
  static AdditiveChar scaled(const PadicNumber& b) { return AdditiveChar(b); }

  const PadicNumber& scale() const { return scale_; }
  int conductor() const { return scale_.valuation(); }
  AdditiveChar inverse() const { return AdditiveChar(-scale_); }
  AdditiveChar rescale(const PadicNumber& a) const { return AdditiveChar(scale_ * a); }
  cplx operator()(const PadicNumber& x) const;

 private:
  explicit AdditiveChar(PadicNumber b) : scale_(std::move(b)) {}
  PadicNumber scale_;
};

/// psi(x) for the standard character: e^{2 pi i frac(x)}.
cplx psi_standard(const PadicNumber& x);

/// Character of Q_p^x: chi(p) = z on the uniformizer, and on units
/// chi(g_n) = e^{2 pi i rot} with g_n = primitive_root(p, n), n the conductor.
class MultChar {
 public:
  MultChar() = default;
  static MultChar trivial(std::int64_t p) { return unramified(p, 1.0); }
  static MultChar unramified(std::int64_t p, cplx z);
  // Finite part given as a rotation at the generator of level `level`; the
  // conductor is reduced to its true value.
  static MultChar make(std::int64_t p, int level, Rotation rot, cplx z);
  // nu = |.|, z = q^{-1}
  static MultChar nu(std::int64_t p) { return unramified(p, 1.0 / static_cast<double>(p)); }

  std::int64_t p() const { return p_; }
  int conductor() const { return n_; }
  bool ramified() const { return n_ > 0; }
  const Rotation& rotation() const { return rot_; }
  cplx z() const { return z_; }

  cplx eval(const PadicNumber& a) const;
  // Value on an integer unit residue (u coprime to p).
  cplx eval_unit(std::int64_t u) const;
  // Finite-part exponent of chi(u) in Q/Z.
  Rotation unit_rotation(std::int64_t u) const;

  MultChar operator*(const MultChar& o) const;
  MultChar inverse() const;
  MultChar pow(int k) const;
  // chi nu^u : z -> z q^{-u}
  MultChar deform(cplx u) const;
  // Exact on the finite part, tolerance on z.
  bool equals(const MultChar& o, double tol = kTol) const;
  // Same finite part (chi / o unramified).
  bool same_finite_part(const MultChar& o) const;
  std::string to_string() const;

 private:
  // Rotation of this character at the generator of level m >= n.
  Rotation rotation_at_level(int m) const;

  std::int64_t p_ = 3;
  int n_ = 0;
  Rotation rot_{};
  cplx z_ = 1.0;
};

int hilbert(const PadicNumber& a, const PadicNumber& b);
// Independent check by solvability of z^2 = a x^2 + b y^2 (see hilbert_oracle docs).
int hilbert_oracle(const PadicNumber& a, const PadicNumber& b);

MultChar chi_b(const PadicNumber& b);

// tau(chi, psi) = sum_{u mod p^n}^x chi(u)^{-1} psi(u p^{-n}); conductor-0 psi.
cplx gauss_sum(const MultChar& chi);

// gamma(psi_a) as a normalized stabilized quadratic Gauss sum.
cplx weil_index(const PadicNumber& a);
// mu_psi(a) = gamma(psi_a) / gamma(psi)
cplx mu_psi(const PadicNumber& a);

// Raw I_k(a) of the stabilization schedule (exposed for tests).
cplx weil_partial(const PadicNumber& a, int k);

}  // namespace symsq
