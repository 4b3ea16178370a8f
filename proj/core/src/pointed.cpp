#include "bncount/pointed.hpp"

#include <string>
#include <vector>

#include "bncount/castelnuovo.hpp"

namespace bncount {

namespace {

void require_pointed_domain(const BNInput& p, const VanishingSeq& a, const char* op) {
  if (p.g < 2) {
    throw PreconditionError(std::string(op) + " requires g >= 2, got g=" + std::to_string(p.g));
  }
  const int adjusted = rho_adjusted(p, a);
  if (adjusted != -1) {
    throw PreconditionError(std::string(op) + " requires adjusted rho == -1, got " +
                            std::to_string(adjusted));
  }
}

}  // namespace

ExactInt pointed_count(const BNInput& p, const VanishingSeq& a) {
  require_pointed_domain(p, a, "pointed_count");
  const int s = p.s();
  std::vector<int> shifted(a.values().begin(), a.values().end());
  ExactRat sum = 0;
  for (int j1 = 0; j1 <= p.r; ++j1) {
    for (int j2 = j1 + 1; j2 <= p.r; ++j2) {
      const int gap = a[j2] - a[j1];
      if (gap * gap == 1) continue;
      shifted[static_cast<std::size_t>(j1)] -= 1;
      shifted[static_cast<std::size_t>(j2)] -= 1;
      ExactRat term(ExactInt(gap * gap - 1) * vandermonde(shifted));
      for (int v : shifted) {
        if (term == 0) break;
        term *= inv_factorial(s + v);
      }
      sum += term;
      shifted[static_cast<std::size_t>(j1)] += 1;
      shifted[static_cast<std::size_t>(j2)] += 1;
    }
  }
  const ExactInt count = require_integer(sum * factorial(p.g), "pointed Castelnuovo number");
  if (count < 0) throw InvariantError("pointed Castelnuovo number is negative");
  return count;
}

ExactInt pencil_count(int g, int d) {
  if (g < 2) throw PreconditionError("pencil_count requires g >= 2, got g=" + std::to_string(g));
  if (2 * d < g + 2 || d > g) {
    throw PreconditionError("pencil_count requires g/2 + 1 <= d <= g, got g=" +
                            std::to_string(g) + " d=" + std::to_string(d));
  }
  const int e = 2 * d - g;
  return ExactInt(e - 1) * (e) * (e + 1) * factorial(g) / (factorial(d) * factorial(g - d));
}

ExactInt plucker_count(const BNInput& p) {
  if (p.r < 1 || p.d < p.r + 1) {
    throw PreconditionError("plucker_count requires r >= 1 and d >= r+1, got " + to_string(p));
  }
  return castelnuovo_number(p) * (p.r + 1) * (p.d + p.r * (p.g - 1));
}

ExactInt cusp_count(const BNInput& p, int n) {
  if (p.g < 2 || p.r < 1 || p.d < 0) {
    throw PreconditionError("cusp_count requires g >= 2 and r >= 1, got " + to_string(p));
  }
  const int value = rho(p);
  if (value != n - p.r - 1 || value <= 0) {
    throw PreconditionError("cusp_count requires rho == n - r - 1 > 0, got rho=" +
                            std::to_string(value) + " n=" + std::to_string(n));
  }
  if (n > p.d) {
    throw PreconditionError("cusp_count requires n <= d, got n=" + std::to_string(n) +
                            " d=" + std::to_string(p.d));
  }
  const int s = p.s();
  ExactRat count(factorial(p.g) * n * (ExactInt(n) * n - 1));
  count *= inv_factorial(s - 1) * inv_factorial(s + n - 1) * inv_factorial(p.r - 1);
  for (int i = 2; i <= p.r; ++i) count *= ExactRat(factorial(i) * (n - i)) * inv_factorial(s - 1 + i);
  return require_integer(count, "cusp count");
}

}  // namespace bncount
