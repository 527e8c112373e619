#include "symsq/local_symbols.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <tuple>

namespace symsq {

bool approx_equal(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

// ---- Rotation -------------------------------------------------------------

Rotation Rotation::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rotation: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  return Rotation{num / g, den / g};
}

Rotation Rotation::parse(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return make(std::stoll(s), 1);
  return make(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

Rotation Rotation::operator+(const Rotation& o) const {
  const std::int64_t l = std::lcm(den, o.den);
  return make(intmod::reduce(num * (l / den) + o.num * (l / o.den), l), l);
}

Rotation Rotation::operator-() const { return make(-num, den); }

Rotation Rotation::times(std::int64_t k) const {
  return make(intmod::mul(num, intmod::reduce(k, den), den), den);
}

cplx Rotation::value() const { return kernels::unit_root(num, den); }

std::string Rotation::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

// ---- unit group (Z/p^n)^x --------------------------------------------------

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct DlogTable {
  std::int64_t g = 0;
  std::vector<std::int64_t> log;  // indexed by residue; -1 on non-units
};

std::mutex g_dlog_mutex;
std::map<std::pair<std::int64_t, int>, std::shared_ptr<const DlogTable>> g_dlog_cache;

constexpr std::int64_t kMaxTable = std::int64_t{1} << 24;

std::shared_ptr<const DlogTable> dlog_table(std::int64_t p, int n) {
  if (n < 1) throw DomainError("dlog: level must be >= 1");
  {
    std::lock_guard<std::mutex> lock(g_dlog_mutex);
    auto it = g_dlog_cache.find({p, n});
    if (it != g_dlog_cache.end()) return it->second;
  }
  const std::int64_t mod = intmod::ipow(p, n);
  if (mod > kMaxTable) throw PrecisionError("dlog: p^n too large for a table");
  const std::int64_t phi = mod / p * (p - 1);
  auto factors = prime_factors(phi);
  std::int64_t g = 2;
  for (;; ++g) {
    if (g % p == 0) continue;
    bool prim = true;
    for (auto l : factors)
      if (intmod::pow(g, phi / l, mod) == 1) {
        prim = false;
        break;
      }
    if (prim) break;
  }
  auto table = std::make_shared<DlogTable>();
  table->g = g;
  table->log.assign(static_cast<std::size_t>(mod), -1);
  std::int64_t x = 1;
  for (std::int64_t e = 0; e < phi; ++e) {
    table->log[static_cast<std::size_t>(x)] = e;
    x = intmod::mul(x, g, mod);
  }
  std::lock_guard<std::mutex> lock(g_dlog_mutex);
  return g_dlog_cache.emplace(std::make_pair(p, n), std::move(table)).first->second;
}

}  // namespace

std::int64_t primitive_root(std::int64_t p, int n) { return dlog_table(p, n)->g; }

std::int64_t discrete_log(std::int64_t u, std::int64_t p, int n) {
  const auto t = dlog_table(p, n);
  const std::int64_t r = t->log[static_cast<std::size_t>(intmod::reduce(u, intmod::ipow(p, n)))];
  if (r < 0) throw DomainError("discrete_log: not a unit");
  return r;
}

// ---- additive character ----------------------------------------------------

cplx psi_standard(const PadicNumber& x) {
  if (x.is_zero() || x.valuation() >= 0) return 1.0;
  const int m = -x.valuation();
  if (m > x.field().precision) throw PrecisionError("psi: principal part beyond precision");
  const std::int64_t pm = x.field().pow_p(m);
  return kernels::unit_root(x.unit() % pm, pm);
}

cplx AdditiveChar::operator()(const PadicNumber& x) const { return psi_standard(scale_ * x); }

// ---- multiplicative characters ---------------------------------------------

MultChar MultChar::unramified(std::int64_t p, cplx z) {
  MultChar c;
  c.p_ = p;
  c.z_ = z;
  return c;
}

MultChar MultChar::make(std::int64_t p, int level, Rotation rot, cplx z) {
  if (level == 0) {
    if (!rot.is_zero()) throw DomainError("multchar: level 0 with nontrivial finite part");
    return unramified(p, z);
  }
  const std::int64_t phi = intmod::ipow(p, level - 1) * (p - 1);
  if (phi % rot.den != 0) throw DomainError("multchar: rotation order does not divide phi(p^n)");
  MultChar c;
  c.p_ = p;
  c.z_ = z;
  if (rot.den == 1) return c;
  c.n_ = 1 + intmod::valuation(rot.den, p);
  // chi(g_n) = chi(g_n viewed at level `level`)
  c.rot_ = rot.times(discrete_log(primitive_root(p, c.n_), p, level));
  return c;
}

Rotation MultChar::rotation_at_level(int m) const {
  if (n_ == 0) return Rotation{};
  if (m < n_) throw DomainError("multchar: level below conductor");
  return rot_.times(discrete_log(primitive_root(p_, m) % intmod::ipow(p_, n_), p_, n_));
}

Rotation MultChar::unit_rotation(std::int64_t u) const {
  if (n_ == 0) return Rotation{};
  return rot_.times(discrete_log(u, p_, n_));
}

cplx MultChar::eval_unit(std::int64_t u) const {
  if (n_ == 0) return 1.0;
  return unit_rotation(u).value();
}

cplx MultChar::eval(const PadicNumber& a) const {
  if (a.is_zero()) throw DomainError("multchar: evaluation at zero");
  if (a.field().p != p_) throw DomainError("multchar: prime mismatch");
  if (n_ > a.field().precision) throw PrecisionError("multchar: conductor exceeds precision");
  const cplx zv = std::pow(z_, a.valuation());
  if (n_ == 0) return zv;
  return zv * eval_unit(a.unit() % intmod::ipow(p_, n_));
}

MultChar MultChar::operator*(const MultChar& o) const {
  if (p_ != o.p_) throw DomainError("multchar: prime mismatch");
  const int m = std::max(n_, o.n_);
  if (m == 0) return unramified(p_, z_ * o.z_);
  return make(p_, m, rotation_at_level(m) + o.rotation_at_level(m), z_ * o.z_);
}

MultChar MultChar::inverse() const {
  MultChar c = *this;
  c.rot_ = -rot_;
  c.z_ = 1.0 / z_;
  return c;
}

MultChar MultChar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  if (n_ == 0) return unramified(p_, std::pow(z_, k));
  return make(p_, n_, rot_.times(k), std::pow(z_, k));
}

MultChar MultChar::deform(cplx u) const {
  MultChar c = *this;
  c.z_ = z_ * std::exp(-u * std::log(static_cast<double>(p_)));
  return c;
}

bool MultChar::same_finite_part(const MultChar& o) const {
  return p_ == o.p_ && n_ == o.n_ && rot_ == o.rot_;
}

bool MultChar::equals(const MultChar& o, double tol) const {
  return same_finite_part(o) && approx_equal(z_, o.z_, tol);
}

std::string MultChar::to_string() const {
  std::string s = "chi[p=" + std::to_string(p_) + ",n=" + std::to_string(n_);
  if (n_ > 0) s += ",rot=" + rot_.to_string();
  char buf[96];
  std::snprintf(buf, sizeof buf, ",z=%.6g%+.6gi]", z_.real(), z_.imag());
  return s + buf;
}

// ---- Hilbert symbol ----------------------------------------------------------

namespace {
inline bool odd(std::int64_t k) { return (k % 2) != 0; }
}  // namespace

int hilbert(const PadicNumber& a, const PadicNumber& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("hilbert: zero argument");
  const std::int64_t p = a.field().p;
  const int alpha = a.valuation(), beta = b.valuation();
  int s = 1;
  if (odd(alpha) && odd(beta) && odd((p - 1) / 2)) s = -s;
  if (odd(beta)) s *= legendre(a.unit(), p);
  if (odd(alpha)) s *= legendre(b.unit(), p);
  return s;
}

int hilbert_oracle(const PadicNumber& a, const PadicNumber& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("hilbert_oracle: zero argument");
  // Rescaling x, y by powers of p moves valuations into {0, 1}; primitive
  // solvability modulo p^3 then decides the global question (p odd).
  const std::int64_t p = a.field().p;
  const std::int64_t mod = intmod::ipow(p, 3);
  auto reduce = [&](const PadicNumber& x) {
    const std::int64_t u = x.unit() % mod;
    return odd(x.valuation()) ? u * p % mod : u;
  };
  return kernels::conic_solvable(reduce(a), reduce(b), p, 3) ? 1 : -1;
}

MultChar chi_b(const PadicNumber& b) {
  const Field& f = b.field();
  const cplx z = static_cast<double>(hilbert(b, PadicNumber::uniformizer_power(f, 1)));
  if (!odd(b.valuation())) return MultChar::unramified(f.p, z);
  // (p^beta w, u) = (u/p)^beta : the Legendre character on units.
  return MultChar::make(f.p, 1, Rotation::make(1, 2), z);
}

cplx gauss_sum(const MultChar& chi) {
  const int n = chi.conductor();
  if (n == 0) throw DomainError("gauss_sum: unramified character");
  const std::int64_t p = chi.p();
  const std::int64_t mod = intmod::ipow(p, n);
  std::vector<cplx> w(static_cast<std::size_t>(mod), 0.0);
  const MultChar inv = chi.inverse();
  for (std::int64_t u = 1; u < mod; ++u)
    if (u % p) w[static_cast<std::size_t>(u)] = inv.eval_unit(u);
  return kernels::twisted_sum(w);
}

// ---- Weil index --------------------------------------------------------------

namespace {
std::mutex g_qgs_mutex;
std::map<std::tuple<std::int64_t, int, std::int64_t>, cplx> g_qgs_cache;

cplx cached_qgs(std::int64_t u, std::int64_t p, int e) {
  const auto key = std::make_tuple(p, e, u);
  {
    std::lock_guard<std::mutex> lock(g_qgs_mutex);
    auto it = g_qgs_cache.find(key);
    if (it != g_qgs_cache.end()) return it->second;
  }
  const cplx s = kernels::quadratic_gauss_sum(u, p, e);
  std::lock_guard<std::mutex> lock(g_qgs_mutex);
  g_qgs_cache.emplace(key, s);
  return s;
}
}  // namespace

cplx weil_partial(const PadicNumber& a, int k) {
  if (a.is_zero()) throw DomainError("weil_index: zero argument");
  const Field& f = a.field();
  const int e = 2 * k - a.valuation();
  const double pk = std::pow(static_cast<double>(f.p), k);
  if (e <= 0) return pk;  // psi(a x^2) trivial on the whole window
  if (e > f.precision) throw PrecisionError("weil_index: window exceeds precision");
  // x = p^{-k} y, y mod p^{k+j}; the summand only depends on y mod p^e.
  const std::int64_t pe = f.pow_p(e);
  const cplx s = cached_qgs(a.unit() % pe, f.p, e);
  return std::pow(static_cast<double>(f.p), k - e) * s;
}

cplx weil_index(const PadicNumber& a) {
  if (a.is_zero()) throw DomainError("weil_index: zero argument");
  const int v = a.valuation();
  const int kmax = std::max(v, 0) + a.field().precision;
  // Windows on which x -> a x^2 is integral give I_k = q^k and say nothing;
  // start at the first window where psi(a x^2) oscillates.
  const int k0 = std::max(0, v >= 0 ? (v + 2) / 2 : 0);
  cplx prev = weil_partial(a, k0);
  for (int k = k0 + 1; k <= kmax; ++k) {
    const cplx cur = weil_partial(a, k);
    if (std::abs(cur - prev) <= kTol * std::max(1.0, std::abs(cur))) return cur / std::abs(cur);
    prev = cur;
  }
  throw PrecisionError("weil_index: no stabilization");
}

cplx mu_psi(const PadicNumber& a) { return weil_index(a) / weil_index(PadicNumber::one(a.field())); }

}  // namespace symsq
