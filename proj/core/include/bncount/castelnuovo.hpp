#pragma once

#include "bncount/bn_core.hpp"
#include "bncount/numeric_core.hpp"

namespace bncount {

// Number of g^r_d on a general curve when rho(p) == 0:
//   N = g! prod_{i=0}^{r} i! / (g-d+r+i)!
ExactInt castelnuovo_number(const BNInput& p);

// Number of g^r_d with vanishing sequence a at a fixed general point when
// rho_adjusted(p, a) == 0. Zero when a_0 + g - d + r < 0 (no such series).
ExactInt adjusted_castelnuovo(const BNInput& p, const VanishingSeq& a);

}  // namespace bncount
