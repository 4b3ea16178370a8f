#include "bncount/verify.hpp"

#include <atomic>
#include <set>

#include "bncount/numeric_core.hpp"
#include "bncount/rng.hpp"
#include "gtest/gtest.h"

namespace bncount {
namespace {

std::string parameter(const VerifyReport& report, const std::string& key) {
  for (const auto& [k, v] : report.parameters) {
    if (k == key) return v;
  }
  return {};
}

bool same_outcome(const VerifyReport& x, const VerifyReport& y) {
  if (x.suite != y.suite || x.parameters != y.parameters || x.cases != y.cases ||
      x.notes != y.notes || x.failures.size() != y.failures.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.failures.size(); ++i) {
    if (x.failures[i].input != y.failures[i].input || x.failures[i].actual != y.failures[i].actual) {
      return false;
    }
  }
  return true;
}

TEST(Suites, AllPassWithSmallCaps) {
  SuiteOptions options;
  options.gmax = 7;
  options.rmax = 3;
  options.samples = 20;
  for (const auto& name : suite_names()) {
    const VerifyReport report = run_suite(name, options);
    EXPECT_TRUE(report.passed()) << name << ": " << (report.failures.empty() ? "" : report.failures[0].input);
    EXPECT_GT(report.cases, 0u) << name;
    EXPECT_EQ(report.suite, name);
  }
}

TEST(Suites, RegressionSuitePassesAtFullSize) {
  EXPECT_TRUE(run_suite("paper-numbers", {}).passed());
}

TEST(Suites, DeterministicAcrossJobCounts) {
  SuiteOptions one;
  one.gmax = 8;
  one.samples = 15;
  SuiteOptions many = one;
  many.jobs = 4;
  for (const std::string name : {"formulas", "identities", "divisors"}) {
    EXPECT_TRUE(same_outcome(run_suite(name, one), run_suite(name, many))) << name;
  }
}

TEST(Suites, SeedIsRecorded) {
  SuiteOptions options;
  options.seed = 99;
  options.samples = 5;
  options.rmax = 2;
  const VerifyReport report = run_suite("identities", options);
  EXPECT_EQ(parameter(report, "seed"), "99");
  EXPECT_TRUE(report.passed());
}

TEST(Suites, UnknownNameThrows) {
  EXPECT_THROW(run_suite("nope", {}), PreconditionError);
}

TEST(RunChecks, CollectsFailuresInOrderAndCatchesExceptions) {
  std::vector<Check> checks;
  for (int i = 0; i < 50; ++i) {
    checks.push_back({"case " + std::to_string(i), [i]() -> std::optional<VerifyFailure> {
                        if (i == 7) throw PreconditionError("boom");
                        if (i % 10 == 3) return VerifyFailure{"", "even", "odd"};
                        return std::nullopt;
                      }});
  }
  const auto failures = run_checks(checks, 4);
  ASSERT_EQ(failures.size(), 6u);
  EXPECT_EQ(failures[0].input, "case 3");
  EXPECT_EQ(failures[1].input, "case 7");
  EXPECT_NE(failures[1].actual.find("boom"), std::string::npos);
  EXPECT_EQ(failures[5].input, "case 43");
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 8, [&hits](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(SeededRng, DeterministicAndBounded) {
  SeededRng x(5);
  SeededRng y(5);
  for (int i = 0; i < 1000; ++i) {
    const auto v = x.uniform(-3, 4);
    EXPECT_EQ(v, y.uniform(-3, 4));
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 4);
  }
  EXPECT_EQ(x.uniform(9, 9), 9);
  EXPECT_THROW(x.uniform(2, 1), PreconditionError);
}

TEST(SeededRng, TaskStreamsDiffer) {
  std::set<std::int64_t> firsts;
  for (std::uint64_t stream = 0; stream < 32; ++stream) {
    firsts.insert(SeededRng::for_task(kDefaultSeed, stream).uniform(0, 1'000'000'000));
  }
  EXPECT_GT(firsts.size(), 30u);
  EXPECT_EQ(SeededRng::for_task(1, 2).uniform(0, 1000), SeededRng::for_task(1, 2).uniform(0, 1000));
}

TEST(SeededRng, DistinctSorted) {
  SeededRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = rng.distinct_sorted(5, 0, 8);
    ASSERT_EQ(v.size(), 5u);
    for (std::size_t i = 1; i < v.size(); ++i) EXPECT_LT(v[i - 1], v[i]);
    EXPECT_GE(v.front(), 0);
    EXPECT_LE(v.back(), 8);
  }
  EXPECT_THROW(rng.distinct_sorted(10, 0, 8), PreconditionError);
}

}  // namespace
}  // namespace bncount
