#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace bncount {

inline constexpr std::uint64_t kDefaultSeed = 20140501;

// Deterministic generator for identity sweeps. The bounded draw is done here
// rather than with std::uniform_int_distribution so that streams are
// identical across standard library implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for task `stream`; depends only on (seed, stream).
  static SeededRng for_task(std::uint64_t seed, std::uint64_t stream);

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  // `count` distinct values from [lo, hi], sorted ascending.
  std::vector<int> distinct_sorted(int count, int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace bncount
