#include "bncount/rng.hpp"

#include <algorithm>
#include <numeric>

#include "bncount/numeric_core.hpp"

namespace bncount {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SeededRng SeededRng::for_task(std::uint64_t seed, std::uint64_t stream) {
  return SeededRng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 1)));
}

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw PreconditionError("empty range in SeededRng::uniform");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(engine_());
  const std::uint64_t range = span + 1;
  // Rejection sampling against the largest multiple of `range`.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

std::vector<int> SeededRng::distinct_sorted(int count, int lo, int hi) {
  if (count < 0 || hi - lo + 1 < count) {
    throw PreconditionError("cannot draw that many distinct values from the range");
  }
  std::vector<int> pool(static_cast<std::size_t>(hi - lo + 1));
  std::iota(pool.begin(), pool.end(), lo);
  // Partial Fisher-Yates.
  for (int i = 0; i < count; ++i) {
    const auto j = static_cast<std::size_t>(uniform(i, static_cast<std::int64_t>(pool.size()) - 1));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace bncount
