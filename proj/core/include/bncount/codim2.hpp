#pragma once

#include <optional>
#include <vector>

#include "bncount/bn_core.hpp"
#include "bncount/numeric_core.hpp"

namespace bncount {

struct SurfaceTerm {
  VanishingSeq a;   // vanishing sequence on the genus-i component
  ExactInt left;    // n_{i,r,d,a}
  ExactInt right;   // n_{g-i,r,d,complement(a)}
};

// Intersection T_i of the test surface S_i (genus-i and genus-(g-i) curves
// glued at moving points) with the codimension-2 locus of g^r_d.
struct SurfaceIntersection {
  int i = 0;
  BNInput p;
  ExactInt value;
  std::vector<SurfaceTerm> terms;  // every enumerated a, zero terms included
};

// T_i = sum_{a : rho_adjusted((i,r,d), a) = -1}
//         n_{i,r,d,a} * n_{g-i,r,d,complement(a)}.
// Requires rho(p) == -2 and 2 <= i <= g - 2.
SurfaceIntersection surface_intersection(int i, const BNInput& p);

struct ProportionalityReport {
  BNInput first;
  BNInput second;
  std::vector<int> surfaces;
  std::vector<ExactInt> first_values;
  std::vector<ExactInt> second_values;
  bool proportional = false;
  // second = ratio * first, when proportional and first is not all zero.
  std::optional<ExactRat> ratio;
};

// Exact cross-multiplication test u_i v_j == u_j v_i for all pairs.
bool exactly_proportional(const std::vector<ExactInt>& u, const std::vector<ExactInt>& v);

// Intersects both loci with each listed S_i and decides proportionality.
// Requires rho == -2 for both.
ProportionalityReport proportionality_report(const BNInput& first, const BNInput& second,
                                             const std::vector<int>& surfaces);

}  // namespace bncount
