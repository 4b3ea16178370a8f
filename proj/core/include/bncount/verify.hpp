#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bncount/rng.hpp"

namespace bncount {

struct VerifyFailure {
  std::string input;
  std::string expected;
  std::string actual;
};

// Outcome of a named invariant sweep. Every number is carried as a decimal
// string. `elapsed` is wall time and is the only field that can differ
// between two runs with identical options.
struct VerifyReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t cases = 0;
  std::vector<VerifyFailure> failures;
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failures.empty(); }
};

struct SuiteOptions {
  // Overrides the per-sweep genus / dimension caps when set.
  std::optional<int> gmax;
  std::optional<int> rmax;
  std::uint64_t seed = kDefaultSeed;
  int samples = 100;
  int jobs = 1;
};

// One named check. `run` returns a failure (input may be left empty) or
// nothing on success.
struct Check {
  std::string input;
  std::function<std::optional<VerifyFailure>()> run;
};

// Calls fn(0..n-1) on up to `jobs` threads. fn must only touch state owned
// by its index.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

// Evaluates checks on `jobs` threads; failures come back in check order.
std::vector<VerifyFailure> run_checks(const std::vector<Check>& checks, int jobs);

// formulas, identities, divisors, paper-numbers
const std::vector<std::string>& suite_names();

// Throws PreconditionError for an unknown suite name.
VerifyReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace bncount
