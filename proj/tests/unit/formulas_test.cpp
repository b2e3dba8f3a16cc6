#include "pxg/formulas.hpp"

#include <gtest/gtest.h>

#include "pxg/errors.hpp"

namespace pxg {
namespace {

TEST(FormulasTest, KnownValues) {
  EXPECT_EQ(det_formula({4, 1}), 6);
  EXPECT_EQ(det_formula({20, 5}), 4);
  EXPECT_EQ(det_formula({8, 4}), 3);
  EXPECT_EQ(det_formula({7, 1}), 7);
  EXPECT_EQ(dist_formula({4, 1}), 5);
  EXPECT_EQ(dist_formula({9, 1}), 3);
  EXPECT_EQ(dist_formula({9, 2}), 2);
  EXPECT_EQ(cost_formula({4, 2}), 5);
  EXPECT_EQ(cost_formula({7, 3}), 3);
  EXPECT_EQ(cost_formula({5, 2}), 4);
  EXPECT_EQ(cost_formula({3, 2}), 3);
  EXPECT_EQ(cost_formula({13, 4}), 4);
  EXPECT_EQ(cost_formula({6, 4}), 2);
  EXPECT_EQ(cost_formula({6, 2}), 4);
  EXPECT_FALSE(cost_formula({5, 1}).has_value());
}

TEST(FormulasTest, RejectsInvalidParameters) {
  EXPECT_THROW(det_formula({2, 1}), UsageError);
  EXPECT_THROW(dist_formula({4, 4}), UsageError);
  EXPECT_THROW(cost_formula({5, 0}), UsageError);
  EXPECT_THROW(ceil_div(3, 0), UsageError);
}

TEST(FormulasTest, InternalConsistency) {
  for (int n = 3; n <= 40; ++n) {
    EXPECT_EQ(det_formula({n, 1}), n == 4 ? 6 : n);
    for (int k = 2; k < n; ++k) {
      if (n == 4 && k == 2) continue;
      int c = ceil_div(n, k);
      int cost = *cost_formula({n, k});
      EXPECT_TRUE(cost == c || cost == c + 1) << n << "," << k;
      EXPECT_EQ(dist_formula({n, k}), 2);
    }
  }
}

TEST(FormulasTest, CeilDiv) {
  EXPECT_EQ(ceil_div(13, 4), 4);
  EXPECT_EQ(ceil_div(12, 4), 3);
  EXPECT_EQ(ceil_div(1, 5), 1);
}

}  // namespace
}  // namespace pxg
