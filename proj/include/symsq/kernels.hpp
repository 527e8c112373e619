#pragma once

// Hot finite sums behind the local symbols, kept in two flavours: `serial`
// is the reference implementation used by the tests, `omp` is the OpenMP
// version used by the library.  Both must agree to rounding (and exactly for
// the boolean/integer kernels).

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace symsq {

using cplx = std::complex<double>;

namespace kernels {

// e(x / m) = exp(2 pi i x / m), x taken modulo m.
cplx unit_root(std::int64_t x, std::int64_t m);

namespace serial {

// Does z^2 = a x^2 + b y^2 have a solution modulo p^k with (x, y) not both
// divisible by p?  a, b are integers (reduced mod p^k).
bool conic_solvable(std::int64_t a, std::int64_t b, std::int64_t p, int k);

// Quadratic Gauss sum  sum_{y mod p^e} e(u y^2 / p^e).
cplx quadratic_gauss_sum(std::int64_t u, std::int64_t p, int e);

// sum_{x mod m} weights[x] e(x / m), m = weights.size().
cplx twisted_sum(const std::vector<cplx>& weights);

// sum_{t < count} e(c (w + w^{-1}) / pk), w = 1 + step*t taken mod pJ.
// Requires pk | pJ and step a power of p.
cplx bessel_orbit_sum(std::int64_t c, std::int64_t pk, std::int64_t step, std::int64_t count,
                      std::int64_t pJ);

// Number of indices i < n with ok(i) false.
std::size_t count_failures(std::size_t n, const std::function<bool(std::size_t)>& ok);

}  // namespace serial

namespace omp {

bool conic_solvable(std::int64_t a, std::int64_t b, std::int64_t p, int k);
cplx quadratic_gauss_sum(std::int64_t u, std::int64_t p, int e);
cplx twisted_sum(const std::vector<cplx>& weights);
cplx bessel_orbit_sum(std::int64_t c, std::int64_t pk, std::int64_t step, std::int64_t count,
                      std::int64_t pJ);
std::size_t count_failures(std::size_t n, const std::function<bool(std::size_t)>& ok);

}  // namespace omp

// Library-wide switch; defaults to the OpenMP kernels.
void use_parallel(bool on);
bool parallel_enabled();

bool conic_solvable(std::int64_t a, std::int64_t b, std::int64_t p, int k);
cplx quadratic_gauss_sum(std::int64_t u, std::int64_t p, int e);
cplx twisted_sum(const std::vector<cplx>& weights);
cplx bessel_orbit_sum(std::int64_t c, std::int64_t pk, std::int64_t step, std::int64_t count,
                      std::int64_t pJ);
std::size_t count_failures(std::size_t n, const std::function<bool(std::size_t)>& ok);

}  // namespace kernels
}  // namespace symsq
