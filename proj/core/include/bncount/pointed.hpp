#pragma once

#include "bncount/bn_core.hpp"
#include "bncount/numeric_core.hpp"

namespace bncount {

/// Pointed Castelnuovo number n_{g,r,d,a}: the number of pairs (p, l) with
/// p a point of a general genus-g curve and l a g^r_d whose vanishing
/// sequence at p is exactly a, when rho_adjusted(p, a) == -1.
///
/// Evaluated as
///   g! sum_{j1<j2} ((a_j2 - a_j1)^2 - 1) V(a - e_j1 - e_j2)
///      / prod_i (g - d + r + a_i - [i==j1] - [i==j2])!
/// where V is the Vandermonde product and 1/n! = 0 for n < 0.
///
/// Requires g >= 2 and a valid for p. The result is checked to be a
/// non-negative integer.
ExactInt pointed_count(const BNInput& p, const VanishingSeq& a);

/// Pencils with a point of vanishing order 2d - g:
///   (2d-g-1)(2d-g)(2d-g+1) g! / (d! (g-d)!)
/// Requires g >= 2 and g/2 + 1 <= d <= g.
ExactInt pencil_count(int g, int d);

/// Total number of ramification points over all g^r_d, rho(p) == 0:
///   N_{g,r,d} (r+1)(d + r(g-1)).
/// Requires r >= 1 and r + 1 <= d.
ExactInt plucker_count(const BNInput& p);

/// Series l with |l(-n p)| nonempty at some point p, rho(p) == n - r - 1 > 0.
/// With s = g - d + r:
///   g! n(n^2-1) / ((s-1)! (s+n-1)! (r-1)!) prod_{i=2}^{r} i!(n-i)/(s-1+i)!
/// evaluated with 1/m! = 0 for m < 0. Equals pointed_count(p, (0,...,r-1,n)).
ExactInt cusp_count(const BNInput& p, int n);

}  // namespace bncount
