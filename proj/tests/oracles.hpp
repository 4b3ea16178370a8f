#pragma once

// Test-only reference computations. Each one takes a different route from
// the library code it is compared against.

#include <algorithm>
#include <vector>

#include "bncount/bn_core.hpp"
#include "bncount/numeric_core.hpp"

namespace bncount::testing {

inline ExactInt naive_factorial(int n) {
  ExactInt value = 1;
  for (int k = 2; k <= n; ++k) value *= k;
  return value;
}

// Laplace expansion along the first row.
inline ExactRat cofactor_det(const std::vector<std::vector<ExactRat>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  ExactRat det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<ExactRat>> minor;
    for (std::size_t row = 1; row < n; ++row) {
      std::vector<ExactRat> line;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) line.push_back(m[row][c]);
      }
      minor.push_back(std::move(line));
    }
    const ExactRat term = m[0][col] * cofactor_det(minor);
    det += (col % 2 == 0) ? term : ExactRat(-term);
  }
  return det;
}

// The factorial matrix built entry by entry from naive factorials.
inline std::vector<std::vector<ExactRat>> factorial_matrix(const std::vector<int>& b) {
  const int r = static_cast<int>(b.size()) - 1;
  std::vector<std::vector<ExactRat>> m;
  for (int i = r; i >= 0; --i) {
    std::vector<ExactRat> row;
    for (int col = 0; col <= r; ++col) {
      const int n = b[static_cast<std::size_t>(i)] - (r - col);
      row.push_back(n < 0 ? ExactRat(0) : ExactRat(ExactInt(1), naive_factorial(n)));
    }
    m.push_back(std::move(row));
  }
  return m;
}

// Filters every (r+1)-subset of {0..d} by bitmask; sorted lexicographically.
inline std::vector<std::vector<int>> brute_force_sequences(const BNInput& p, int target) {
  std::vector<std::vector<int>> out;
  if (p.d > 20) return out;
  for (unsigned mask = 0; mask < (1u << (p.d + 1)); ++mask) {
    std::vector<int> a;
    for (int v = 0; v <= p.d; ++v) {
      if (mask & (1u << v)) a.push_back(v);
    }
    if (static_cast<int>(a.size()) != p.r + 1) continue;
    int weight = 0;
    for (int i = 0; i <= p.r; ++i) weight += a[static_cast<std::size_t>(i)] - i;
    if (p.g - (p.r + 1) * (p.g - p.d + p.r) - weight == target) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bncount::testing
