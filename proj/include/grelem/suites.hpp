#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grelem/localize.hpp"
#include "grelem/words.hpp"

namespace grelem {

struct Failure {
  std::string input, expected, got;
};

struct Report {
  std::string suite;
  std::string params;  // echo of the options that shaped the run
  std::uint64_t seed = 7;
  unsigned trials = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0.0;
  bool pass() const { return failures.empty(); }
};

struct SuiteOptions {
  std::optional<GroupCase> kase;       // restricts the case mix
  std::optional<unsigned> n;           // restricts the size (where the suite allows)
  std::optional<CoeffRing> ring;       // restricts the coefficient ring
  unsigned num_vars = 2;
  std::uint64_t seed = 7;
  std::optional<unsigned> trials;      // overrides the suite default
  std::vector<std::uint64_t> primes = {2, 3, 5};
  std::optional<unsigned> dilation_exponent;  // forced exponent for the dilation suite
};

const std::vector<std::string>& suite_names();

// Runs one named property suite. Deterministic for a fixed (name, options):
// every trial derives its own generator seed from (seed, trial index), so the
// report is identical whether trials run serially or in parallel.
Report run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace grelem
