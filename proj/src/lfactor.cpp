#include "symsq/lfactor.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>

#include "symsq/errors.hpp"

namespace symsq {

bool roots_close(cplx a, cplx b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

namespace {

// Greedy matching; returns the number of elements of `a` matched in `b`.
std::size_t match_count(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol) {
  std::vector<char> used(b.size(), 0);
  std::size_t hits = 0;
  for (const cplx& x : a) {
    // nearest unused candidate, so clusters are not stolen by a neighbour
    std::size_t best = b.size();
    double bd = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j] || !roots_close(x, b[j], tol)) continue;
      const double d = std::abs(x - b[j]);
      if (best == b.size() || d < bd) {
        best = j;
        bd = d;
      }
    }
    if (best < b.size()) {
      used[best] = 1;
      ++hits;
    }
  }
  return hits;
}

std::string fmt_c(cplx z) {
  char buf[80];
  if (std::abs(z.imag()) < 1e-12)
    std::snprintf(buf, sizeof buf, "%.10g", z.real());
  else
    std::snprintf(buf, sizeof buf, "(%.10g%+.10gi)", z.real(), z.imag());
  return buf;
}

}  // namespace

bool same_roots(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol) {
  return a.size() == b.size() && match_count(a, b, tol) == a.size();
}

bool roots_divide(const std::vector<cplx>& small, const std::vector<cplx>& big, double tol) {
  return match_count(small, big, tol) == small.size();
}

std::vector<cplx> expand_inverse_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{1.0};
  for (const cplx& r : roots) {
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= r * c[i - 1];
  }
  return c;
}

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 1) return {};
  const cplx lead = coeffs.back();
  if (lead == 0.0) throw DomainError("poly_roots: zero leading coefficient");
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
  // Newton polish against the original coefficients
  for (cplx& r : roots) {
    for (int it = 0; it < 8; ++it) {
      cplx f = 0.0, df = 0.0;
      for (int i = deg; i >= 0; --i) {
        df = df * r + f;
        f = f * r + coeffs[static_cast<std::size_t>(i)];
      }
      if (df == 0.0) break;
      const cplx step = f / df;
      r -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(r))) break;
    }
  }
  return roots;
}

// ---- LFactor ---------------------------------------------------------------------

std::vector<cplx> LFactor::polynomial() const { return expand_inverse_roots(roots_); }

cplx LFactor::eval(cplx s, double q) const {
  const cplx y = std::exp(-s * std::log(q));
  cplx den = 1.0;
  for (const cplx& a : roots_) den *= 1.0 - a * y;
  if (std::abs(den) < 1e-14) throw DomainError("lfactor: evaluation at a pole");
  return 1.0 / den;
}

LFactor operator*(const LFactor& a, const LFactor& b) {
  std::vector<cplx> r = a.roots_;
  r.insert(r.end(), b.roots_.begin(), b.roots_.end());
  return LFactor(std::move(r));
}

std::string LFactor::render() const {
  if (roots_.empty()) return "1";
  std::string s;
  for (const cplx& a : roots_) s += "(1 - " + fmt_c(a) + " q^{-s})^{-1}";
  return s;
}

LFactor lf_mul(const LFactor& a, const LFactor& b) { return a * b; }

LFactor lf_lcm(const std::vector<LFactor>& factors, double tol) {
  std::vector<cplx> out;
  for (const LFactor& f : factors) {
    std::vector<char> used(out.size(), 0);
    for (const cplx& r : f.inverse_roots()) {
      bool hit = false;
      for (std::size_t j = 0; j < out.size(); ++j)
        if (!used[j] && roots_close(r, out[j], tol)) {
          used[j] = 1;
          hit = true;
          break;
        }
      if (!hit) {
        out.push_back(r);
        used.push_back(1);
      }
    }
  }
  return LFactor(std::move(out));
}

// ---- LaurentRational ------------------------------------------------------------

LaurentRational::LaurentRational(cplx c, int k, std::vector<cplx> num, std::vector<cplx> den)
    : c_(c), k_(k), num_(std::move(num)), den_(std::move(den)) {
  if (c_ == 0.0) {
    k_ = 0;
    num_.clear();
    den_.clear();
    return;
  }
  cancel();
}

void LaurentRational::cancel() {
  std::vector<cplx> keep;
  for (const cplx& a : num_) {
    auto it = std::find_if(den_.begin(), den_.end(), [&](cplx b) { return roots_close(a, b); });
    if (it != den_.end())
      den_.erase(it);
    else
      keep.push_back(a);
  }
  num_ = std::move(keep);
}

LaurentRational LaurentRational::from_lfactor(const LFactor& l) {
  std::vector<cplx> den;
  for (const cplx& a : l.inverse_roots()) {
    const cplx r = std::sqrt(a);
    den.push_back(r);
    den.push_back(-r);
  }
  return LaurentRational(1.0, 0, {}, std::move(den));
}

LaurentRational LaurentRational::from_laurent_poly(int low, const std::vector<cplx>& coeffs) {
  double scale = 0.0;
  for (const cplx& c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return zero();
  const double eps = 1e-12 * scale;
  std::size_t lo = 0, hi = coeffs.size();
  while (lo < hi && std::abs(coeffs[lo]) <= eps) ++lo;
  while (hi > lo && std::abs(coeffs[hi - 1]) <= eps) --hi;
  if (lo == hi) return zero();
  const cplx c0 = coeffs[lo];
  std::vector<cplx> q(coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                      coeffs.begin() + static_cast<std::ptrdiff_t>(hi));
  for (cplx& x : q) x /= c0;
  std::vector<cplx> inv;
  for (const cplx& r : poly_roots(q)) inv.push_back(1.0 / r);
  return LaurentRational(c0, low + static_cast<int>(lo), std::move(inv), {});
}

std::vector<cplx> LaurentRational::num_coeffs() const { return expand_inverse_roots(num_); }
std::vector<cplx> LaurentRational::den_coeffs() const { return expand_inverse_roots(den_); }

cplx LaurentRational::eval_x(cplx x) const {
  if (is_zero()) return 0.0;
  cplx n = c_ * std::pow(x, k_), d = 1.0;
  for (const cplx& a : num_) n *= 1.0 - a * x;
  for (const cplx& b : den_) d *= 1.0 - b * x;
  if (std::abs(d) < 1e-12) throw DomainError("laurent rational: evaluation at a pole");
  return n / d;
}

cplx LaurentRational::eval(cplx s, double q) const { return eval_x(std::exp(-0.5 * s * std::log(q))); }

LaurentRational LaurentRational::substitute(cplx c, int m) const {
  if (is_zero()) return *this;
  if (m != 1 && m != -1 && m != 2 && m != -2) throw UnsupportedInput("substitute: |m| must be 1 or 2");
  cplx unit = c_ * std::pow(c, k_);
  int k = m * k_;
  std::vector<cplx> num, den;
  // (1 - beta X^m) rewritten in inverse roots of X
  auto expand = [&](cplx alpha, std::vector<cplx>& out, int sign) {
    const cplx beta = alpha * c;
    switch (m) {
      case 1: out.push_back(beta); return;
      case 2: {
        const cplx r = std::sqrt(beta);
        out.push_back(r);
        out.push_back(-r);
        return;
      }
      case -1:
        out.push_back(1.0 / beta);
        unit = sign > 0 ? unit * -beta : unit / -beta;
        k -= sign;
        return;
      default: {
        const cplx r = 1.0 / std::sqrt(beta);
        out.push_back(r);
        out.push_back(-r);
        unit = sign > 0 ? unit * -beta : unit / -beta;
        k -= 2 * sign;
        return;
      }
    }
  };
  for (const cplx& a : num_) expand(a, num, +1);
  for (const cplx& b : den_) expand(b, den, -1);
  return LaurentRational(unit, k, std::move(num), std::move(den));
}

LaurentRational LaurentRational::inverse() const {
  if (is_zero()) throw DomainError("laurent rational: inverse of zero");
  return LaurentRational(1.0 / c_, -k_, den_, num_);
}

LaurentRational operator*(const LaurentRational& a, const LaurentRational& b) {
  if (a.is_zero() || b.is_zero()) return LaurentRational::zero();
  std::vector<cplx> num = a.num_, den = a.den_;
  num.insert(num.end(), b.num_.begin(), b.num_.end());
  den.insert(den.end(), b.den_.begin(), b.den_.end());
  return LaurentRational(a.c_ * b.c_, a.k_ + b.k_, std::move(num), std::move(den));
}

LaurentRational operator/(const LaurentRational& a, const LaurentRational& b) { return a * b.inverse(); }

bool LaurentRational::equals(const LaurentRational& o, double tol) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return k_ == o.k_ && std::abs(c_ - o.c_) <= tol * std::max(1.0, std::abs(c_)) &&
         same_roots(num_, o.num_) && same_roots(den_, o.den_);
}

bool LaurentRational::coeff_equals(const LaurentRational& o, double tol) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (k_ != o.k_ || std::abs(c_ - o.c_) > tol * std::max(1.0, std::abs(c_))) return false;
  auto close = [tol](const std::vector<cplx>& x, const std::vector<cplx>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (std::abs(x[i] - y[i]) > tol * std::max(1.0, std::abs(x[i]))) return false;
    return true;
  };
  return close(num_coeffs(), o.num_coeffs()) && close(den_coeffs(), o.den_coeffs());
}

std::string LaurentRational::render() const {
  if (is_zero()) return "0";
  std::string s = fmt_c(c_);
  if (k_ != 0) s += " X^" + std::to_string(k_);
  for (const cplx& a : num_) s += " (1 - " + fmt_c(a) + " X)";
  if (!den_.empty()) {
    s += " / [";
    for (const cplx& b : den_) s += "(1 - " + fmt_c(b) + " X)";
    s += "]";
  }
  return s;
}

std::optional<UnitRatio> lr_ratio_is_unit(const LaurentRational& a, const LaurentRational& b) {
  if (b.is_zero()) throw DomainError("lr_ratio_is_unit: zero denominator");
  if (a.is_zero()) return std::nullopt;
  const LaurentRational r = a / b;
  if (!r.is_unit()) return std::nullopt;
  return UnitRatio{r.unit_coeff(), r.unit_exp()};
}

cplx lr_eval(const LaurentRational& a, cplx s, double q) { return a.eval(s, q); }

}  // namespace symsq
