#pragma once

#include <string>
#include <vector>

#include "bncount/bn_core.hpp"
#include "bncount/numeric_core.hpp"

namespace bncount {

// A divisor class on the moduli space of 1-pointed stable genus-g curves in
// the basis lambda, psi, delta_irr, delta_1, ..., delta_{g-1}.
class DivisorClass {
 public:
  explicit DivisorClass(int g);

  int genus() const { return g_; }

  ExactRat lambda;
  ExactRat psi;
  ExactRat delta_irr;

  // Coefficient of delta_i, 1 <= i <= g - 1.
  ExactRat& delta(int i);
  const ExactRat& delta(int i) const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator*=(const ExactRat& factor);
  friend DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs) { return lhs += rhs; }
  friend DivisorClass operator*(const ExactRat& factor, DivisorClass c) { return c *= factor; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  // "9*lambda - delta_irr - 3*delta_1 - 3*delta_2"
  std::string to_string() const;

 private:
  int g_;
  std::vector<ExactRat> delta_;
};

// (g+3) lambda - (g+1)/6 delta_irr - sum_i i(g-i) delta_i, for g >= 3.
DivisorClass bn_class(int g);

// -lambda + C(g+1,2) psi - sum_i C(g-i+1,2) delta_i, for g >= 2.
DivisorClass w_class(int g);

struct MuNu {
  ExactRat mu;
  ExactRat nu;
};

// Sequences (a_0 + 1 - [i==0], ..., a_r + 1 - [i==r]) for i = 0..r that are
// strictly increasing with last entry <= d. Others carry no limit linear
// series and are omitted.
std::vector<VanishingSeq> neighbor_sequences(const BNInput& p, const VanishingSeq& a);

// sum_i n_{g-1,r,d,a^(i)} over neighbor_sequences().
ExactInt neighbor_sum(const BNInput& p, const VanishingSeq& a);

// Coefficients of the pointed Brill-Noether divisor in terms of the BN and
// Weierstrass classes. Requires g > 2 and rho_adjusted(p, a) == -1.
MuNu mu_nu(const BNInput& p, const VanishingSeq& a);

// mu * bn_class(g) + nu * w_class(g).
DivisorClass pointed_class(const BNInput& p, const VanishingSeq& a);

// Both test-curve relations hold exactly:
//   n_{g,r,d,a} = nu C(g+1,2)(2g-2)
//   neighbor_sum = (mu(g-1) + nu C(g,2))(2g-4)
bool test_curve_consistency(const BNInput& p, const VanishingSeq& a);

}  // namespace bncount
