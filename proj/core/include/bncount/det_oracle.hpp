#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>

#include "bncount/bn_core.hpp"
#include "bncount/numeric_core.hpp"

namespace bncount {

// Independent routes to n_{g,r,d,a}: the expanded flag-bundle determinant
// and its symmetric-polynomial form, plus the polynomial identities that
// tie them to pointed_count().

struct SymPolyValues {
  ExactInt sigma1, sigma2, sigma3, sigma4;
  int s = 0;
  int r = 0;
};

// sigma_k(a) (zero past the length of a) together with s and r = |a| - 1.
SymPolyValues sym_poly_values(int s, const VanishingSeq& a);

struct PValues {
  ExactRat p2, p3, p4;
};

// The quadratic-in-s quotient P2 s^2 + P3 s + P4 of the determinant bracket
// by V(a), as closed-form polynomials in r and sigma_1..sigma_4.
PValues eval_P(int r, const VanishingSeq& a);

// The bracket of the expanded determinant, a polynomial in g, d and a
// (r = |a| - 1). No domain checks: any integers are accepted.
ExactInt det_bracket(int g, int d, std::span<const int> a);

// det_bracket with g and d eliminated through rho_adjusted == -1:
//   g = (r+1)s - 1 + sum(a_i - i),  d = rs + r - 1 + sum(a_i - i).
ExactInt det_bracket_at(int s, const VanishingSeq& a);

// g!/prod_j (g-d+r+a_j)! * det_bracket. Requires the pointed_count domain
// and g - d + r + a_0 >= 0.
ExactInt pointed_via_det(const BNInput& p, const VanishingSeq& a);

// g! V(a)/prod_j (g-d+r+a_j)! * (P2 s^2 + P3 s + P4). Same domain as
// pointed_via_det.
ExactInt pointed_via_sym(const BNInput& p, const VanishingSeq& a);

// sum_{j1<j2} ((a_j2-a_j1)^2 - 1)(s+a_j1)(s+a_j2) V(a - e_j1 - e_j2).
// Requires |a| == r + 1.
ExactInt f_bracket(int s, int r, const VanishingSeq& a);

// Coefficients of the explicit sigma-expansion of the bracket for one r.
// Monomial order:
//   s^2: sigma1^2, sigma2, 1
//   s^1: sigma1^3, sigma1 sigma2, sigma3, sigma2, sigma1^2, sigma1, 1
//   s^0: sigma1^2 sigma2, sigma2^2, sigma1 sigma3, sigma1^3, sigma3,
//        sigma1 sigma2, sigma1^2, sigma2, sigma1, 1
struct HCoefficients {
  std::array<std::int64_t, 3> s2;
  std::array<std::int64_t, 7> s1;
  std::array<std::int64_t, 10> s0;
};

inline constexpr int kHTableMaxR = 7;

// Table for 1 <= r <= 7.
const HCoefficients& h_coefficients(int r);

// V(a) times the tabulated expansion. Requires 1 <= r <= 7, |a| == r + 1.
ExactInt h_bracket_explicit(int s, int r, const VanishingSeq& a);

// sum_i a_i^t prod_{l<k} (a_k - shift[i==k] - a_l + shift[i==l]).
// Any integer list, repeated entries allowed.
ExactInt shifted_power_sum(int t, std::span<const int> a, int shift = 1);

// sum_i a_i V(a - e_i) == (sum_i a_i - r(r+1)/2) V(a).
bool lemma_example_check(const VanishingSeq& a);

// shifted_power_sum(t, a) changes sign when two entries of a are swapped.
bool lemma_antisymmetry_check(int t, std::span<const int> a, std::pair<int, int> swap);

}  // namespace bncount
