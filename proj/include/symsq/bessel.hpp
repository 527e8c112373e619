#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symsq/local_symbols.hpp"

namespace symsq {

struct BesselQuery {
  PadicNumber x;
  int m = 1;  // range parameter; requires |x| > q^{9m}

  bool in_range() const;
};

// j(x) = int_{x u^{-2} in 1 + p^{3m}} (-x, u) mu_psi(u)^{-1} psi(x/u + u) du,
// du with vol(O) = 1, evaluated as a finite coset sum at resolution p^J
// (default J = max(k, 3m) where v(x) = -2k).
cplx bessel_eval(const BesselQuery& query, std::optional<int> resolution = std::nullopt);

// Smallest admissible resolution for x.
int bessel_min_resolution(const BesselQuery& query);

struct BesselRow {
  int v = 0;
  std::string cls;
  cplx j = 0.0;
};

// Both unit square classes (1, u0) for every valuation in [vmin, vmax] (each v must
// satisfy v < -9m).
std::vector<BesselRow> bessel_range_scan(const Field& f, int m, int vmin, int vmax);

}  // namespace symsq
