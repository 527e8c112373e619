// Serial reference vs OpenMP kernels.  Prints one line per kernel with the
// best-of-N wall time of each and whether the results agree.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "symsq/kernels.hpp"

using namespace symsq;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e30;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void line(const char* name, double ts, double tp, bool agree) {
  std::printf("%-22s serial %9.4fs  omp %9.4fs  speedup %5.2fx  %s\n", name, ts, tp, ts / tp,
              agree ? "agree" : "MISMATCH");
}

bool close(cplx a, cplx b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); }

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  const int reps = 3;

  {
    bool a = false, b = false;
    // (2, 5) is nonsplit over Q_5: the search has to exhaust every residue
    const double ts = best_of(reps, [&] { a = kernels::serial::conic_solvable(2, 5, 5, 4); });
    const double tp = best_of(reps, [&] { b = kernels::omp::conic_solvable(2, 5, 5, 4); });
    line("conic_solvable", ts, tp, a == b);
  }
  {
    cplx a, b;
    const double ts = best_of(reps, [&] { a = kernels::serial::quadratic_gauss_sum(3, 7, 8); });
    const double tp = best_of(reps, [&] { b = kernels::omp::quadratic_gauss_sum(3, 7, 8); });
    line("quadratic_gauss_sum", ts, tp, close(a, b));
  }
  {
    std::vector<cplx> w(1 << 20);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = cplx(std::cos(0.001 * i), std::sin(0.37 * i));
    cplx a, b;
    const double ts = best_of(reps, [&] { a = kernels::serial::twisted_sum(w); });
    const double tp = best_of(reps, [&] { b = kernels::omp::twisted_sum(w); });
    line("twisted_sum", ts, tp, close(a, b));
  }
  {
    // 5^12 with orbit step 5^3
    const std::int64_t pk = 244140625, step = 125, count = pk / step;
    cplx a, b;
    const double ts = best_of(reps, [&] { a = kernels::serial::bessel_orbit_sum(1234567, pk, step, count, pk); });
    const double tp = best_of(reps, [&] { b = kernels::omp::bessel_orbit_sum(1234567, pk, step, count, pk); });
    line("bessel_orbit_sum", ts, tp, close(a, b));
  }
  {
    const std::size_t n = 1 << 22;
    auto ok = [](std::size_t i) { return (i * 2654435761u) % 97 != 0; };
    std::size_t a = 0, b = 0;
    const double ts = best_of(reps, [&] { a = kernels::serial::count_failures(n, ok); });
    const double tp = best_of(reps, [&] { b = kernels::omp::count_failures(n, ok); });
    line("count_failures", ts, tp, a == b);
  }
  return 0;
}
