#include "symsq/bessel.hpp"

#include <cmath>
#include <limits>

namespace symsq {

bool BesselQuery::in_range() const { return !x.is_zero() && -x.valuation() > 9 * m; }

int bessel_min_resolution(const BesselQuery& query) {
  const int k = (-query.x.valuation() + 1) / 2;
  return std::max(k, 3 * query.m);
}

cplx bessel_eval(const BesselQuery& query, std::optional<int> resolution) {
  if (query.m < 1) throw DomainError("bessel: m must be positive");
  if (!query.in_range()) throw DomainError("bessel: |x| <= q^{9m}, outside the asymptotic range");
  const PadicNumber& x = query.x;
  // u^2 in x (1 + p^{3m}) forces x to be a square
  if (!is_square(x)) return 0.0;
  const Field& f = x.field();
  const int k = -x.valuation() / 2;  // v(r) = -k
  if (k > f.precision) throw PrecisionError("bessel: precision must be at least -v(x)/2");
  const int J = resolution.value_or(bessel_min_resolution(query));
  if (J < bessel_min_resolution(query)) throw DomainError("bessel: resolution too coarse");
  const int step_e = 3 * query.m;
  if (static_cast<double>(J) * std::log2(static_cast<double>(f.p)) > 61.0)
    throw PrecisionError("bessel: p^J exceeds integer range");

  const PadicNumber r = sqrt(x);
  const std::int64_t pk = f.pow_p(k), pJ = f.pow_p(J);
  const std::int64_t step = f.pow_p(step_e), count = f.pow_p(J - step_e);
  const double q = static_cast<double>(f.p);
  cplx total = 0.0;
  for (int sign : {1, -1}) {
    const PadicNumber u0 = sign > 0 ? r : -r;
    // constant on u0 (1 + p^{3m}): a square class; mu_psi(a b^2) = mu_psi(a)
    const PadicNumber rep = square_class(u0).representative(f);
    const cplx weight = static_cast<double>(hilbert(-x, u0)) / mu_psi(rep);
    const std::int64_t c = u0.unit() % pk;
    const cplx s = kernels::bessel_orbit_sum(c, pk, step, count, pJ);
    total += weight * s;
  }
  // du: |r| q^{-J} per coset
  return total * std::pow(q, k - J);
}

std::vector<BesselRow> bessel_range_scan(const Field& f, int m, int vmin, int vmax) {
  std::vector<BesselRow> rows;
  for (int v = vmin; v <= vmax; ++v)
    for (bool nonres : {false, true}) {
      const SquareClass cls{((v % 2) + 2) % 2, nonres};
      const PadicNumber x = PadicNumber::make(f, v, nonres ? smallest_nonresidue(f.p) : 1);
      rows.push_back({v, cls.name(), bessel_eval({x, m})});
    }
  return rows;
}

}  // namespace symsq
