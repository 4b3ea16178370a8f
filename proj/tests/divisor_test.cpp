#include "bncount/divisor.hpp"

#include "bncount/pointed.hpp"
#include "gtest/gtest.h"

namespace bncount {
namespace {

VanishingSeq weierstrass_sequence(int g) {
  std::vector<int> a;
  for (int i = 0; i <= g - 2; ++i) a.push_back(i);
  a.push_back(g);
  return VanishingSeq(a);
}

TEST(DivisorClass, BasicClasses) {
  EXPECT_EQ(bn_class(3).to_string(), "6*lambda - (2/3)*delta_irr - 2*delta_1 - 2*delta_2");
  EXPECT_EQ(w_class(2).to_string(), "-lambda + 3*psi - delta_1");
  EXPECT_EQ(w_class(3).to_string(), "-lambda + 6*psi - 3*delta_1 - delta_2");
  const DivisorClass bn4 = bn_class(4);
  EXPECT_EQ(bn4.lambda, 7);
  EXPECT_EQ(bn4.delta_irr, ExactRat(-5, 6));
  EXPECT_EQ(bn4.delta(2), -4);
  EXPECT_EQ(bn4.psi, 0);
}

TEST(DivisorClass, Errors) {
  EXPECT_THROW(bn_class(2), PreconditionError);
  EXPECT_THROW(w_class(1), PreconditionError);
  DivisorClass c(3);
  EXPECT_THROW(c.delta(0), PreconditionError);
  EXPECT_THROW(c.delta(3), PreconditionError);
  EXPECT_THROW(c += DivisorClass(4), PreconditionError);
}

TEST(DivisorClass, Linearity) {
  const DivisorClass sum = ExactRat(1, 2) * bn_class(5) + 3 * w_class(5);
  EXPECT_EQ(sum.lambda, ExactRat(8, 2) - 3);
  EXPECT_EQ(sum.psi, 45);
  EXPECT_EQ(sum.delta(1), ExactRat(-4, 2) - 30);
  EXPECT_EQ(DivisorClass(5) + bn_class(5), bn_class(5));
  EXPECT_EQ(DivisorClass(3).to_string(), "0");
}

TEST(MuNu, EllipticPencilExample) {
  const MuNu m = mu_nu({3, 1, 2}, {0, 1});
  EXPECT_EQ(m.mu, ExactRat(3, 2));
  EXPECT_EQ(m.nu, 0);
  EXPECT_EQ(pointed_class({3, 1, 2}, {0, 1}).to_string(),
            "9*lambda - delta_irr - 3*delta_1 - 3*delta_2");
}

TEST(MuNu, Errors) {
  EXPECT_THROW(mu_nu({2, 1, 2}, {0, 2}), PreconditionError);
  EXPECT_THROW(mu_nu({4, 1, 3}, {0, 1}), PreconditionError);
}

TEST(MuNu, WeierstrassGivesPureW) {
  for (int g = 3; g <= 8; ++g) {
    const BNInput p{g, g - 1, 2 * g - 2};
    const VanishingSeq a = weierstrass_sequence(g);
    EXPECT_EQ(pointed_count(p, a), ExactInt(g) * g * g - g) << "g=" << g;
    const MuNu m = mu_nu(p, a);
    EXPECT_EQ(m.mu, 0) << "g=" << g;
    EXPECT_EQ(m.nu, 1) << "g=" << g;
    EXPECT_EQ(pointed_class(p, a), w_class(g));
  }
}

TEST(MuNu, TestCurvesAndLambdaCoefficient) {
  int instances = 0;
  for (int g = 3; g <= 8; ++g) {
    for (int r = 1; r <= 3; ++r) {
      for (int d = r; d <= g + r; ++d) {
        const BNInput p{g, r, d};
        for (const auto& a : enumerate_sequences(p, -1)) {
          ++instances;
          EXPECT_TRUE(test_curve_consistency(p, a)) << to_string(p) << " a=" << a.to_string();
          const MuNu m = mu_nu(p, a);
          EXPECT_GE(m.mu, 0);
          EXPECT_GE(m.nu, 0);
          EXPECT_EQ(pointed_class(p, a).lambda, m.mu * (g + 3) - m.nu);
        }
      }
    }
  }
  EXPECT_GT(instances, 30);
}

TEST(NeighborSequences, GatesNonStrictAndOverDegree) {
  // i = 0 keeps 0, raises 1 -> 2: (0,2). i = 1 raises 0 -> 1, keeps 1: not strict.
  EXPECT_EQ(neighbor_sequences({3, 1, 2}, {0, 1}), std::vector<VanishingSeq>{VanishingSeq({0, 2})});
  // (0,3) with d = 3: i = 0 gives (0,4) > d; i = 1 gives (1,3).
  EXPECT_EQ(neighbor_sequences({4, 1, 3}, {0, 3}), std::vector<VanishingSeq>{VanishingSeq({1, 3})});
  EXPECT_EQ(neighbor_sum({3, 1, 2}, {0, 1}), 6);
}

}  // namespace
}  // namespace bncount
