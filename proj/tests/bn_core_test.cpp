#include "bncount/bn_core.hpp"

#include "bncount/numeric_core.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace bncount {
namespace {

TEST(VanishingSeq, EnforcesStrictness) {
  EXPECT_NO_THROW(VanishingSeq({0, 2, 5}));
  EXPECT_THROW(VanishingSeq({0, 2, 2}), PreconditionError);
  EXPECT_THROW(VanishingSeq({3, 1}), PreconditionError);
  EXPECT_THROW(VanishingSeq({-1, 1}), PreconditionError);
  EXPECT_THROW(VanishingSeq(std::vector<int>{}), PreconditionError);
  EXPECT_EQ(VanishingSeq::identity(3), VanishingSeq({0, 1, 2, 3}));
  EXPECT_EQ(VanishingSeq({0, 2, 5}).weight(), 4);
}

TEST(ParseSequence, EchoesOffendingPair) {
  EXPECT_EQ(parse_sequence("0,2,4"), VanishingSeq({0, 2, 4}));
  try {
    parse_sequence("0,3,3");
    FAIL() << "expected an error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("3,3"), std::string::npos);
  }
  EXPECT_THROW(parse_sequence("0,,2"), PreconditionError);
  EXPECT_THROW(parse_sequence("0,x"), PreconditionError);
  EXPECT_THROW(parse_sequence(""), PreconditionError);
}

TEST(RequireValid, LengthAndDegreeBound) {
  EXPECT_THROW(require_valid({4, 1, 3}, {0, 1, 2}), PreconditionError);
  EXPECT_THROW(require_valid({4, 1, 3}, {0, 4}), PreconditionError);
  EXPECT_THROW(rho_adjusted({4, 1, 3}, {0, 4}), PreconditionError);
  EXPECT_NO_THROW(require_valid({4, 1, 3}, {0, 3}));
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho({10, 2, 8}), -2);
  EXPECT_EQ(rho({4, 1, 3}), 0);
  EXPECT_EQ(rho({3, 1, 2}), -1);
}

TEST(RhoAdjusted, Examples) {
  EXPECT_EQ(rho_adjusted({4, 1, 3}, {0, 2}), -1);
  EXPECT_EQ(rho_adjusted({3, 2, 4}, {0, 1, 3}), -1);
  for (int g = 0; g <= 8; ++g) {
    for (int r = 0; r <= 3; ++r) {
      for (int d = r; d <= 10; ++d) {
        EXPECT_EQ(rho_adjusted({g, r, d}, VanishingSeq::identity(r)), rho({g, r, d}));
      }
    }
  }
}

TEST(EhExists, Examples) {
  EXPECT_TRUE(eh_exists({4, 1, 3}, {0, 1}));
  EXPECT_FALSE(eh_exists({4, 1, 3}, {0, 2}));
  EXPECT_FALSE(eh_exists({2, 1, 2}, {0, 2}));
  EXPECT_THROW(eh_exists({0, 1, 2}, {0, 2}), PreconditionError);
}

// Lowering any entry (keeping the sequence strict) never destroys existence.
TEST(EhExists, MonotoneUnderEntrywiseDecrease) {
  for (int g = 1; g <= 8; ++g) {
    for (int r = 0; r <= 3; ++r) {
      for (int d = r; d <= g + r + 1; ++d) {
        const BNInput p{g, r, d};
        for (int target = -3; target <= 3; ++target) {
          for (const auto& a : enumerate_sequences(p, target)) {
            if (!eh_exists(p, a)) continue;
            for (int i = 0; i <= r; ++i) {
              std::vector<int> lower(a.values().begin(), a.values().end());
              lower[static_cast<std::size_t>(i)] -= 1;
              if (lower[static_cast<std::size_t>(i)] < 0) continue;
              if (i > 0 && lower[static_cast<std::size_t>(i)] <= lower[static_cast<std::size_t>(i - 1)]) continue;
              EXPECT_TRUE(eh_exists(p, VanishingSeq(lower)))
                  << to_string(p) << " a=" << a.to_string() << " lowered at " << i;
            }
          }
        }
      }
    }
  }
}

TEST(Complement, ExamplesAndInvolution) {
  EXPECT_EQ(complement({4, 1, 3}, {0, 2}), VanishingSeq({1, 3}));
  EXPECT_EQ(complement({10, 2, 8}, {0, 1, 2}), VanishingSeq({6, 7, 8}));
  for (int d = 2; d <= 9; ++d) {
    const BNInput p{5, 2, d};
    for (int target = -6; target <= 6; ++target) {
      for (const auto& a : enumerate_sequences(p, target)) {
        EXPECT_EQ(complement(p, complement(p, a)), a);
      }
    }
  }
}

TEST(EnumerateSequences, Examples) {
  EXPECT_EQ(enumerate_sequences({2, 1, 2}, -1), std::vector<VanishingSeq>{VanishingSeq({0, 2})});
  EXPECT_EQ(enumerate_sequences({3, 1, 2}, -1), std::vector<VanishingSeq>{VanishingSeq({0, 1})});
  EXPECT_TRUE(enumerate_sequences({4, 1, 3}, 1).empty());
  EXPECT_TRUE(enumerate_sequences({4, 3, 2}, -1).empty());
}

TEST(EnumerateSequences, MatchesBruteForce) {
  for (int g = 0; g <= 10; ++g) {
    for (int r = 0; r <= 3; ++r) {
      for (int d = 0; d <= 10; ++d) {
        for (int target = -4; target <= 3; ++target) {
          const BNInput p{g, r, d};
          const auto expected = testing::brute_force_sequences(p, target);
          const auto actual = enumerate_sequences(p, target);
          ASSERT_EQ(actual.size(), expected.size()) << to_string(p) << " target " << target;
          for (std::size_t k = 0; k < actual.size(); ++k) {
            EXPECT_EQ(std::vector<int>(actual[k].values().begin(), actual[k].values().end()), expected[k]);
            if (k > 0) EXPECT_LT(actual[k - 1], actual[k]);
          }
        }
      }
    }
  }
}

// Adjusted numbers on the two sides of a node add up to rho of the glued curve.
TEST(Complement, AdjustedRhoIsAdditiveAcrossANode) {
  for (int g = 0; g <= 10; ++g) {
    for (int r = 0; r <= 2; ++r) {
      for (int d = r; d <= 8; ++d) {
        for (int i = 0; i <= g; ++i) {
          const BNInput left{i, r, d};
          const BNInput right{g - i, r, d};
          for (int target = -3; target <= 3; ++target) {
            for (const auto& a : enumerate_sequences(left, target)) {
              EXPECT_EQ(rho_adjusted(left, a) + rho_adjusted(right, complement(left, a)),
                        rho({g, r, d}));
            }
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace bncount
