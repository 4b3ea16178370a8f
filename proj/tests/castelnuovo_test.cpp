#include "bncount/castelnuovo.hpp"

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace bncount {
namespace {

using testing::naive_factorial;

TEST(CastelnuovoNumber, Examples) {
  EXPECT_EQ(castelnuovo_number({4, 1, 3}), 2);
  EXPECT_EQ(castelnuovo_number({3, 2, 4}), 1);
  // 720 * (1/2)(1/6)(2/24)
  EXPECT_EQ(castelnuovo_number({6, 2, 6}), 5);
}

TEST(CastelnuovoNumber, RejectsNonzeroRho) {
  EXPECT_THROW(castelnuovo_number({4, 1, 4}), PreconditionError);
  EXPECT_THROW(castelnuovo_number({10, 2, 8}), PreconditionError);
}

TEST(CastelnuovoNumber, PencilsAreCatalanNumbers) {
  for (int m = 1; m <= 15; ++m) {
    const ExactInt catalan = naive_factorial(2 * m) / (naive_factorial(m) * naive_factorial(m + 1));
    EXPECT_EQ(castelnuovo_number({2 * m, 1, m + 1}), catalan) << "m=" << m;
  }
  EXPECT_EQ(castelnuovo_number({30, 1, 16}), 9694845);
}

TEST(AdjustedCastelnuovo, Examples) {
  EXPECT_EQ(adjusted_castelnuovo({4, 1, 3}, {0, 1}), 2);
  // 6 * 2 / (1! 3!)
  EXPECT_EQ(adjusted_castelnuovo({3, 1, 3}, {0, 2}), 2);
  EXPECT_EQ(adjusted_castelnuovo({2, 1, 2}, {0, 1}), 1);
  EXPECT_THROW(adjusted_castelnuovo({4, 1, 3}, {0, 2}), PreconditionError);
}

TEST(AdjustedCastelnuovo, ExistenceGateGivesZero) {
  // s = -1, a_0 + s = -1.
  EXPECT_EQ(rho_adjusted({1, 2, 4}, {0, 3, 4}), 0);
  EXPECT_EQ(adjusted_castelnuovo({1, 2, 4}, {0, 3, 4}), 0);
}

TEST(AdjustedCastelnuovo, ReducesToClassicalForTrivialVanishing) {
  int instances = 0;
  for (int g = 0; g <= 12; ++g) {
    for (int r = 0; r <= g + 1; ++r) {
      for (int d = r; d <= g + r; ++d) {
        const BNInput p{g, r, d};
        if (rho(p) != 0) continue;
        ++instances;
        EXPECT_EQ(adjusted_castelnuovo(p, VanishingSeq::identity(r)), castelnuovo_number(p))
            << to_string(p);
      }
    }
  }
  EXPECT_GT(instances, 20);
}

TEST(AdjustedCastelnuovo, NonNegativeIntegerOnSweep) {
  for (int g = 0; g <= 10; ++g) {
    for (int r = 0; r <= 3; ++r) {
      for (int d = r; d <= g + r + 2; ++d) {
        for (const auto& a : enumerate_sequences({g, r, d}, 0)) {
          EXPECT_GE(adjusted_castelnuovo({g, r, d}, a), 0);
        }
      }
    }
  }
}

}  // namespace
}  // namespace bncount
