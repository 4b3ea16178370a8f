#include "bncount/castelnuovo.hpp"

#include <string>

namespace bncount {

ExactInt castelnuovo_number(const BNInput& p) {
  if (p.g < 0 || p.r < 0 || p.d < 0) {
    throw PreconditionError("g, r, d must be non-negative, got " + to_string(p));
  }
  if (const int value = rho(p); value != 0) {
    throw PreconditionError("castelnuovo_number requires rho == 0, got rho=" +
                            std::to_string(value));
  }
  ExactRat product = ExactRat(factorial(p.g));
  for (int i = 0; i <= p.r; ++i) product *= ExactRat(factorial(i)) * inv_factorial(p.s() + i);
  return require_integer(product, "Castelnuovo number");
}

ExactInt adjusted_castelnuovo(const BNInput& p, const VanishingSeq& a) {
  if (const int value = rho_adjusted(p, a); value != 0) {
    throw PreconditionError("adjusted_castelnuovo requires adjusted rho == 0, got " +
                            std::to_string(value));
  }
  if (a.front() + p.s() < 0) return 0;
  ExactRat count(factorial(p.g) * vandermonde(a.values()));
  for (int ai : a.values()) count *= inv_factorial(p.s() + ai);
  return require_integer(count, "adjusted Castelnuovo number");
}

}  // namespace bncount
