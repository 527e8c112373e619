#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "symsq/json_io.hpp"

namespace symsq {

struct RunConfig {
  std::int64_t p = 5;
  int precision = 8;
  double tol = kTol;
  double root_tol = kRootTol;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;  // randomized property checks
  std::optional<json> input;   // descriptors replacing the default battery
};

struct CheckResult {
  std::string name;
  std::string status;    // "pass", "fail", "unchecked", "error"
  std::string identity;  // what is being asserted
  json detail = json::object();
  double seconds = 0.0;

  bool failed() const { return status == "fail" || status == "error"; }
};

struct Report {
  RunConfig config;
  std::vector<CheckResult> checks;

  bool ok() const;
  // Checks sorted by name; timings only on request so that reports stay
  // byte-identical across runs.
  json to_json(bool timing = false) const;
};

const std::vector<std::string>& subcommands();

// Runs one subcommand ("suite" runs all of them).  Malformed descriptors
// throw UnsupportedInput; library errors inside a check become "error"
// entries in the report.
Report run(const std::string& subcommand, const RunConfig& config);

// Deterministic batteries shared by the runner and the tests.
namespace battery {

// Random character of exact conductor n with chi(p) = z.
MultChar character(std::int64_t p, int n, cplx z, std::mt19937_64& rng);
// n in {0,1,2} x z in {1, random unimodular, q^{-1/3}}.
std::vector<MultChar> characters(std::int64_t p, std::uint64_t seed);
// All ordered pairs from characters().
std::vector<GL2Rep> principal_series(std::int64_t p, std::uint64_t seed);
std::vector<GL2Rep> unramified_ps(std::int64_t p, std::uint64_t seed, std::size_t count);
std::vector<GL2Rep> steinberg(std::int64_t p, std::uint64_t seed);

}  // namespace battery

}  // namespace symsq
