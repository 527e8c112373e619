#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "symsq/padic.hpp"

namespace symsq {

/// [[a, b], [c, d]] over Q_p at working precision.
struct GL2 {
  PadicNumber a, b, c, d;

  static GL2 identity(const Field& f);
  static GL2 torus(const PadicNumber& x, const PadicNumber& y);  // t(x, y)
  static GL2 upper(const PadicNumber& x);                        // n(x)
  static GL2 lower(const PadicNumber& x);                        // nbar(x)
  static GL2 weyl(const Field& f);                               // w2
  static GL2 scalar(const PadicNumber& x) { return torus(x, x); }

  const Field& field() const { return a.field(); }
  PadicNumber det() const { return a * d - b * c; }
  GL2 inverse() const;
  bool is_upper_triangular() const { return c.is_zero(); }
  bool is_diagonal() const { return b.is_zero() && c.is_zero(); }
  bool is_upper_unipotent() const;
  std::string to_string() const;

  friend GL2 operator*(const GL2& x, const GL2& y);
  friend bool operator==(const GL2& x, const GL2& y);
};

// Entries agree to `digits` p-adic digits below the largest entry of either
// matrix.  Products and inverses lose low digits to cancellation, so exact ==
// is too strict for round-trip identities; digits defaults to N / 2.
bool near(const GL2& x, const GL2& y, int digits = -1);

/// g = n1 t w n2 with w in {I, w2}.
struct BruhatForm {
  GL2 n1, t, w, n2;
  bool big_cell = false;  // w == w2

  GL2 recompose() const { return n1 * t * w * n2; }
};

BruhatForm bruhat_decompose(const GL2& g);
// Torus part t(g) of the Bruhat decomposition.
GL2 torus_part(const GL2& g);

PadicNumber kubota_X(const GL2& g);
int cocycle(const GL2& g1, const GL2& g2);
int cocycle_bls(const GL2& g1, const GL2& g2);
// kappa(k) = (c, d / det k) for c in p O \ {0}, else 1: on GL2(O) the Kubota
// cocycle is the coboundary of kappa.
int kubota_kappa(const GL2& k);

struct MetaElement {
  GL2 g;
  int xi = 1;

  static MetaElement section(const GL2& g) { return {g, 1}; }  // s(g) = (g, 1)
  friend MetaElement operator*(const MetaElement& x, const MetaElement& y);
  friend bool operator==(const MetaElement& x, const MetaElement& y) {
    return x.g == y.g && x.xi == y.xi;
  }
  MetaElement inverse() const;
};

inline bool near(const MetaElement& x, const MetaElement& y, int digits = -1) {
  return x.xi == y.xi && near(x.g, y.g, digits);
}

// iota g = w2 tg^{-1} w2
GL2 involution(const GL2& g);
// Lift of iota to s(T), s(N) (and hence the scalar squares); throws
// UnsupportedInput elsewhere.
MetaElement meta_involution(const MetaElement& x);

enum class Subgroup { N, A, Z2, W, K };
Subgroup parse_subgroup(const std::string& s);
std::string subgroup_name(Subgroup s);

struct SplittingResult {
  bool split = false;       // sigma_2 trivial on all sampled pairs
  bool predicted = false;   // what the theory predicts for this subgroup
  std::size_t samples = 0;
  std::size_t nontrivial = 0;
};

SplittingResult check_splitting(const Field& f, Subgroup s, std::size_t samples, std::uint64_t seed);

// Random generators used by batteries.  Entries have valuation in
// [vmin, vmax] (or are zero with small probability) and a random unit part.
PadicNumber random_padic(const Field& f, std::mt19937_64& rng, int vmin = -2, int vmax = 2);
PadicNumber random_unit(const Field& f, std::mt19937_64& rng);
GL2 random_gl2(const Field& f, std::mt19937_64& rng);
GL2 random_k(const Field& f, std::mt19937_64& rng);

// Can the cocycle identity for (a, b, c) be decided at the working precision?
// False when cancellation in a product flips a zero test (c(g) = 0 mod p^N
// while truly nonzero) or loses the determinant; detected by redoing the
// products at about twice the precision.
bool products_resolved(const GL2& a, const GL2& b, const GL2& c);

}  // namespace symsq
