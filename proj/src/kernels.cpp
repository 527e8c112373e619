#include "symsq/kernels.hpp"

#include <atomic>
#include <exception>
#include <cmath>
#include <numbers>

#include "symsq/padic.hpp"

namespace symsq::kernels {

cplx unit_root(std::int64_t x, std::int64_t m) {
  x = intmod::reduce(x, m);
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(x) / static_cast<double>(m);
  return {std::cos(theta), std::sin(theta)};
}

namespace {

std::vector<char> square_table(std::int64_t mod) {
  std::vector<char> sq(static_cast<std::size_t>(mod), 0);
  for (std::int64_t z = 0; z < mod; ++z) sq[static_cast<std::size_t>(intmod::mul(z, z, mod))] = 1;
  return sq;
}

bool conic_row(std::int64_t x, std::int64_t a, std::int64_t b, std::int64_t p, std::int64_t mod,
               const std::vector<char>& sq) {
  const std::int64_t ax2 = intmod::mul(a, intmod::mul(x, x, mod), mod);
  for (std::int64_t y = 0; y < mod; ++y) {
    if (x % p == 0 && y % p == 0) continue;
    const std::int64_t r = (ax2 + intmod::mul(b, intmod::mul(y, y, mod), mod)) % mod;
    if (sq[static_cast<std::size_t>(r)]) return true;
  }
  return false;
}

// Orbit term shared by both Bessel kernels.
inline cplx bessel_term(std::int64_t t, std::int64_t c, std::int64_t pk, std::int64_t step,
                        std::int64_t pJ) {
  const std::int64_t w = (1 + intmod::mul(step, t, pJ)) % pJ;
  const std::int64_t winv = intmod::inverse(w, pJ);
  const std::int64_t tr = (w % pk + winv % pk) % pk;
  return unit_root(intmod::mul(c, tr, pk), pk);
}

}  // namespace

namespace serial {

bool conic_solvable(std::int64_t a, std::int64_t b, std::int64_t p, int k) {
  const std::int64_t mod = intmod::ipow(p, k);
  a = intmod::reduce(a, mod);
  b = intmod::reduce(b, mod);
  const auto sq = square_table(mod);
  for (std::int64_t x = 0; x < mod; ++x)
    if (conic_row(x, a, b, p, mod, sq)) return true;
  return false;
}

cplx quadratic_gauss_sum(std::int64_t u, std::int64_t p, int e) {
  const std::int64_t mod = intmod::ipow(p, e);
  cplx acc = 0.0;
  for (std::int64_t y = 0; y < mod; ++y) acc += unit_root(intmod::mul(u, intmod::mul(y, y, mod), mod), mod);
  return acc;
}

cplx twisted_sum(const std::vector<cplx>& weights) {
  const auto m = static_cast<std::int64_t>(weights.size());
  cplx acc = 0.0;
  for (std::int64_t x = 0; x < m; ++x)
    if (weights[static_cast<std::size_t>(x)] != 0.0) acc += weights[static_cast<std::size_t>(x)] * unit_root(x, m);
  return acc;
}

cplx bessel_orbit_sum(std::int64_t c, std::int64_t pk, std::int64_t step, std::int64_t count,
                      std::int64_t pJ) {
  cplx acc = 0.0;
  for (std::int64_t t = 0; t < count; ++t) acc += bessel_term(t, c, pk, step, pJ);
  return acc;
}

std::size_t count_failures(std::size_t n, const std::function<bool(std::size_t)>& ok) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!ok(i)) ++bad;
  return bad;
}

}  // namespace serial

namespace omp {

bool conic_solvable(std::int64_t a, std::int64_t b, std::int64_t p, int k) {
  const std::int64_t mod = intmod::ipow(p, k);
  a = intmod::reduce(a, mod);
  b = intmod::reduce(b, mod);
  const auto sq = square_table(mod);
  std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t x = 0; x < mod; ++x) {
    if (found.load(std::memory_order_relaxed)) continue;
    if (conic_row(x, a, b, p, mod, sq)) found.store(true, std::memory_order_relaxed);
  }
  return found.load();
}

cplx quadratic_gauss_sum(std::int64_t u, std::int64_t p, int e) {
  const std::int64_t mod = intmod::ipow(p, e);
  double re = 0.0, im = 0.0;
#pragma omp parallel for reduction(+ : re, im) schedule(static)
  for (std::int64_t y = 0; y < mod; ++y) {
    const cplx z = unit_root(intmod::mul(u, intmod::mul(y, y, mod), mod), mod);
    re += z.real();
    im += z.imag();
  }
  return {re, im};
}

cplx twisted_sum(const std::vector<cplx>& weights) {
  const auto m = static_cast<std::int64_t>(weights.size());
  double re = 0.0, im = 0.0;
#pragma omp parallel for reduction(+ : re, im) schedule(static)
  for (std::int64_t x = 0; x < m; ++x) {
    const cplx w = weights[static_cast<std::size_t>(x)];
    if (w == 0.0) continue;
    const cplx z = w * unit_root(x, m);
    re += z.real();
    im += z.imag();
  }
  return {re, im};
}

cplx bessel_orbit_sum(std::int64_t c, std::int64_t pk, std::int64_t step, std::int64_t count,
                      std::int64_t pJ) {
  // Only w mod pk matters.  e(x/pk) = hi[x / B] lo[x % B] replaces sincos, and
  // (1 + s)^{-1} = 1 - s + s^2 - ... terminates mod pk because step | s.
  (void)pJ;
  auto B = static_cast<std::int64_t>(std::sqrt(static_cast<double>(pk))) + 1;
  std::vector<cplx> hi(static_cast<std::size_t>(pk / B + 1)), lo(static_cast<std::size_t>(B));
  for (std::size_t i = 0; i < hi.size(); ++i) hi[i] = unit_root(static_cast<std::int64_t>(i) * B, pk);
  for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = unit_root(static_cast<std::int64_t>(i), pk);
  int terms = 1;
  for (__int128 s = step; s < pk; s *= step) ++terms;
  const std::int64_t cm = intmod::reduce(c, pk);
  const bool small = pk < (std::int64_t{1} << 31);  // products fit in 63 bits
  auto mulm = [&](std::int64_t a, std::int64_t b) { return small ? a * b % pk : intmod::mul(a, b, pk); };
  double re = 0.0, im = 0.0;
#pragma omp parallel for reduction(+ : re, im) schedule(static)
  for (std::int64_t t = 0; t < count; ++t) {
    const std::int64_t s = mulm(step % pk, t % pk);
    std::int64_t inv = 1;
    for (int i = 0; i < terms; ++i) {
      inv = 1 - mulm(s, inv);
      if (inv < 0) inv += pk;
    }
    const std::int64_t x = mulm(cm, (1 + s + inv) % pk);
    const cplx z = hi[static_cast<std::size_t>(x / B)] * lo[static_cast<std::size_t>(x % B)];
    re += z.real();
    im += z.imag();
  }
  return {re, im};
}

std::size_t count_failures(std::size_t n, const std::function<bool(std::size_t)>& ok) {
  std::size_t bad = 0;
  // an exception may not leave the parallel region; keep the one from the
  // lowest index so that the rethrown error matches the serial loop
  std::exception_ptr err;
  std::size_t err_at = n;
#pragma omp parallel for reduction(+ : bad) schedule(dynamic, 16)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      if (!ok(i)) ++bad;
    } catch (...) {
#pragma omp critical(symsq_count_failures)
      if (i < err_at) {
        err_at = i;
        err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
  return bad;
}

}  // namespace omp

namespace {
std::atomic<bool> g_parallel{true};
}

void use_parallel(bool on) { g_parallel.store(on); }
bool parallel_enabled() { return g_parallel.load(); }

bool conic_solvable(std::int64_t a, std::int64_t b, std::int64_t p, int k) {
  return parallel_enabled() ? omp::conic_solvable(a, b, p, k) : serial::conic_solvable(a, b, p, k);
}
cplx quadratic_gauss_sum(std::int64_t u, std::int64_t p, int e) {
  return parallel_enabled() ? omp::quadratic_gauss_sum(u, p, e) : serial::quadratic_gauss_sum(u, p, e);
}
cplx twisted_sum(const std::vector<cplx>& weights) {
  return parallel_enabled() ? omp::twisted_sum(weights) : serial::twisted_sum(weights);
}
cplx bessel_orbit_sum(std::int64_t c, std::int64_t pk, std::int64_t step, std::int64_t count,
                      std::int64_t pJ) {
  return parallel_enabled() ? omp::bessel_orbit_sum(c, pk, step, count, pJ)
                            : serial::bessel_orbit_sum(c, pk, step, count, pJ);
}
std::size_t count_failures(std::size_t n, const std::function<bool(std::size_t)>& ok) {
  return parallel_enabled() ? omp::count_failures(n, ok) : serial::count_failures(n, ok);
}

}  // namespace symsq::kernels
