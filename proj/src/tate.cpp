#include "symsq/tate.hpp"

#include <cmath>
#include <map>

namespace symsq {

namespace {

bool is_ideal_term(const SchwartzFn::Term& t) { return t.a.is_zero() || t.a.valuation() >= t.k; }

PadicNumber scaled_integer(const Field& f, std::int64_t i, int e) {
  if (i == 0) return PadicNumber::zero(f);
  return PadicNumber::from_integer(f, i) * PadicNumber::uniformizer_power(f, e);
}

}  // namespace

cplx SchwartzFn::operator()(const PadicNumber& x) const {
  cplx acc = 0.0;
  for (const Term& t : terms_)
    if ((x - t.a).in_ideal(t.k)) acc += t.c;
  return acc;
}

SchwartzFn SchwartzFn::reduced() const {
  if (terms_.empty()) return *this;
  const Field& f = terms_.front().a.field();
  int level = terms_.front().k, lo = terms_.front().k;
  for (const Term& t : terms_) {
    level = std::max(level, t.k);
    lo = std::min(lo, t.k);
    if (!t.a.is_zero()) lo = std::min(lo, t.a.valuation());
  }
  if (level - lo > f.precision) throw PrecisionError("schwartz: common level beyond precision");
  const std::int64_t mod = f.pow_p(level - lo);
  std::map<std::int64_t, cplx> cells;
  for (const Term& t : terms_) {
    std::int64_t base = 0;
    if (!t.a.is_zero() && t.a.valuation() < level)
      base = intmod::mul(f.pow_p(t.a.valuation() - lo), t.a.unit(), mod);
    const std::int64_t step = f.pow_p(t.k - lo), count = f.pow_p(level - t.k);
    for (std::int64_t i = 0; i < count; ++i) cells[(base + i * step) % mod] += t.c;
  }
  std::vector<Term> out;
  for (const auto& [key, c] : cells)
    if (std::abs(c) > 1e-13) out.push_back({scaled_integer(f, key, lo), level, c});
  return SchwartzFn(std::move(out));
}

SchwartzFn fourier(const SchwartzFn& phi, const AdditiveChar& psi) {
  std::vector<SchwartzFn::Term> out;
  const int cond = psi.conductor();
  for (const auto& t : phi.terms()) {
    const Field& f = t.a.field();
    const double q = static_cast<double>(f.p);
    // self-dual measure for psi_b is |b|^{1/2} dx
    const cplx scale = t.c * std::pow(q, -0.5 * cond) * std::pow(q, -t.k);
    const int support = -t.k - cond;  // transform supported on p^{support}
    if (is_ideal_term(t)) {
      out.push_back({PadicNumber::zero(f), support, scale});
      continue;
    }
    // psi(b a y) is constant on cosets of p^{-v(a) - cond}
    const int level = -t.a.valuation() - cond;
    const std::int64_t count = f.pow_p(level - support);
    for (std::int64_t i = 0; i < count; ++i) {
      const PadicNumber y = scaled_integer(f, i, support);
      out.push_back({y, level, scale * psi(t.a * y)});
    }
  }
  return SchwartzFn(std::move(out));
}

LaurentRational tate_zeta(const SchwartzFn& phi, const MultChar& chi, const Field& f) {
  const double q = static_cast<double>(f.p);
  const int n = chi.conductor();
  std::map<int, cplx> poly;  // Y-exponent -> coefficient
  std::map<int, cplx> tail;  // Y-exponent -> coefficient, over (1 - zY)
  // int_{O^x} chi d^x x by brute force over units mod p^{max(n,1)}
  const int ul = std::max(n, 1);
  const std::int64_t umod = f.pow_p(ul);
  cplx unit_int = 0.0;
  for (std::int64_t u = 1; u < umod; ++u)
    if (u % f.p) unit_int += chi.eval_unit(u);
  unit_int *= std::pow(q, -ul);
  const bool tail_alive = std::abs(unit_int) > 1e-12;

  for (const auto& t : phi.terms()) {
    if (is_ideal_term(t)) {
      // sum_{j >= k} z^j Y^j int_{O^x} chi = unit_int z^k Y^k / (1 - zY)
      if (tail_alive) tail[t.k] += t.c * unit_int * std::pow(chi.z(), t.k);
      continue;
    }
    // single shell: |x| = |a| on a + p^k; sum chi over the finer cosets
    const int v = t.a.valuation();
    const int level = std::max(t.k, v + n);
    const std::int64_t count = f.pow_p(level - t.k);
    cplx acc = 0.0;
    for (std::int64_t i = 0; i < count; ++i) acc += chi.eval(t.a + scaled_integer(f, i, t.k));
    poly[v] += t.c * acc * std::pow(q, v - level);
  }

  // numerator = P(Y)(1 - zY) + T(Y)
  std::map<int, cplx> num = poly;
  if (!tail.empty()) {
    for (const auto& [e, c] : poly) num[e + 1] -= c * chi.z();
    for (const auto& [e, c] : tail) num[e] += c;
  }
  if (num.empty()) return LaurentRational::zero();
  const int lo = num.begin()->first, hi = num.rbegin()->first;
  std::vector<cplx> coeffs(static_cast<std::size_t>(2 * (hi - lo) + 1), 0.0);
  for (const auto& [e, c] : num) coeffs[static_cast<std::size_t>(2 * (e - lo))] = c;
  LaurentRational z = LaurentRational::from_laurent_poly(2 * lo, coeffs);
  if (!tail.empty()) z = z * LaurentRational::from_lfactor(LFactor({chi.z()}));
  return z;
}

LFactor tate_L(const MultChar& chi) {
  if (chi.ramified()) return LFactor::one();
  return LFactor({chi.z()});
}

LaurentRational tate_psi_scaling(const MultChar& chi, const PadicNumber& a) {
  const int v = a.valuation();
  const double q = static_cast<double>(a.field().p);
  return LaurentRational::unit(chi.eval(a) * std::pow(q, 0.5 * v), 2 * v);
}

LaurentRational tate_epsilon(const MultChar& chi, const AdditiveChar& psi) {
  LaurentRational base = LaurentRational::unit(1.0, 0);
  if (chi.ramified()) {
    const int n = chi.conductor();
    base = LaurentRational::unit(std::pow(chi.z(), n) * gauss_sum(chi), 2 * n);
  }
  return base * tate_psi_scaling(chi, psi.scale());
}

LaurentRational tate_gamma(const MultChar& chi, const AdditiveChar& psi) {
  const double q = static_cast<double>(chi.p());
  const LaurentRational dual = LaurentRational::from_lfactor(tate_L(chi.inverse())).reflect(q);
  return tate_epsilon(chi, psi) * dual / LaurentRational::from_lfactor(tate_L(chi));
}

TateTriple tate_triple(const MultChar& chi, const AdditiveChar& psi) {
  return {tate_L(chi), tate_epsilon(chi, psi), tate_gamma(chi, psi)};
}

GammaOracle tate_gamma_oracle(const MultChar& chi, const AdditiveChar& psi, const Field& f) {
  const double q = static_cast<double>(f.p);
  const int m = std::max(chi.conductor(), 1);
  const PadicNumber one = PadicNumber::one(f);
  const PadicNumber g = PadicNumber::from_integer(f, primitive_root(f.p, 1));
  const std::vector<SchwartzFn> tests = {
      SchwartzFn::ideal(f, 0),
      SchwartzFn::indicator(one, m),
      SchwartzFn::indicator(g, m + 1),
      SchwartzFn::indicator(PadicNumber::uniformizer_power(f, -1), m - 1),
  };
  const MultChar dual = chi.inverse();
  GammaOracle out;
  out.consistent = true;
  for (const SchwartzFn& phi : tests) {
    const LaurentRational rhs = tate_zeta(phi, chi, f);
    const LaurentRational lhs = tate_zeta(fourier(phi, psi), dual, f).reflect(q);
    if (rhs.is_zero()) {
      if (!lhs.is_zero()) out.consistent = false;
      continue;
    }
    const LaurentRational gam = lhs / rhs;
    if (out.test_functions == 0)
      out.gamma = gam;
    else if (!gam.equals(out.gamma, 1e-8))
      out.consistent = false;
    ++out.test_functions;
  }
  if (out.test_functions == 0) out.consistent = false;
  return out;
}

PadicNumber stability_constant(const MultChar& xi, const Field& f) {
  const int n = xi.conductor();
  if (n < 1) throw DomainError("stability_constant: unramified character");
  const int lo = (n + 1) / 2, hi = n / 2;
  const std::int64_t wmod = f.pow_p(hi);
  const std::int64_t count = f.pow_p(n - lo);
  for (std::int64_t w = 1; w <= std::max<std::int64_t>(wmod, 1); ++w) {
    if (w % f.p == 0) continue;
    const PadicNumber c = PadicNumber::make(f, -n, w);
    bool ok = true;
    for (std::int64_t i = 1; i < count && ok; ++i) {
      const PadicNumber x = scaled_integer(f, i, lo);
      ok = approx_equal(xi.eval(PadicNumber::one(f) + x), psi_standard(c * x), 1e-9);
    }
    if (ok) return c;
  }
  throw DomainError("stability_constant: no matching c found");
}

}  // namespace symsq
