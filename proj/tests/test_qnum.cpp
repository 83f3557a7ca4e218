#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "qmink/qnum.hpp"

using namespace qmink;

TEST(DeformationParams, RejectsQAtMostOne) {
  EXPECT_THROW(DeformationParams(1.0), std::invalid_argument);
  EXPECT_THROW(DeformationParams(0.9), std::invalid_argument);
  EXPECT_NO_THROW(DeformationParams(1.0 + 1e-9));
}

TEST(DeformationParams, Lambda) {
  for (double q : {1.01, 1.1, 1.5, 2.0}) {
    DeformationParams p(q);
    EXPECT_DOUBLE_EQ(p.lambda(), q - 1.0 / q);
  }
}

TEST(Bracket, SmallArguments) {
  DeformationParams p(1.1);
  EXPECT_EQ(bracket(0, p), 0.0);
  EXPECT_NEAR(bracket(1, p), 1.0, 1e-15);
  // 1.1 + 1/1.1
  EXPECT_NEAR(bracket(2, p), 2.00909090909090909090909, 1e-14);
}

TEST(Bracket, OddInArgument) {
  DeformationParams p(1.3);
  for (double a : {0.5, 1.0, 2.5, 7.0, 13.0}) EXPECT_NEAR(bracket(-a, p), -bracket(a, p), 1e-13 * std::abs(bracket(a, p)));
}

TEST(Curly, Values) {
  DeformationParams p(1.1);
  EXPECT_EQ(curly(0, p), 2.0);
  EXPECT_NEAR(curly(1, p), 2.00909090909090909090909, 1e-14);
  EXPECT_NEAR(curly(1, p), bracket(2, p), 1e-14);
  EXPECT_DOUBLE_EQ(curly(-3, p), curly(3, p));
  for (double a : {-4.0, -1.5, 0.0, 2.0, 9.0}) EXPECT_GE(curly(a, p), 2.0);
}

TEST(Bracket, DoublingIdentity) {
  for (double q : {1.01, 1.1, 1.5, 2.0}) {
    DeformationParams p(q);
    for (double a : {0.5, 1.0, 3.0, 6.5, 11.0}) {
      const double lhs = bracket(a, p) * curly(a, p);
      EXPECT_NEAR(lhs, bracket(2 * a, p), 1e-12 * std::abs(lhs));
    }
  }
}

TEST(SumIdentity, RejectsZero) { EXPECT_THROW(sum_identity(0, DeformationParams(1.1)), std::invalid_argument); }

TEST(SumIdentity, FirstTerm) {
  DeformationParams p(1.1);
  const auto s = sum_identity(1, p);
  const double c1 = curly(1, p), c2 = curly(2, p);
  EXPECT_NEAR(s.lhs, bracket(3, p) / (c1 * c1 * c2 * c2), 1e-15);
  EXPECT_NEAR(s.rhs, bracket(2, p) / (bracket(2, p) * c1 * c1 * c2 * c2) * (1 + bracket(4, p) / bracket(2, p)), 1e-15);
  EXPECT_NEAR(s.lhs, s.rhs, 1e-15);
}

class SumIdentitySweep : public ::testing::TestWithParam<double> {};

TEST_P(SumIdentitySweep, HoldsUpToThirty) {
  DeformationParams p(GetParam());
  for (int j = 1; j <= 30; ++j) {
    const auto s = sum_identity(j, p);
    EXPECT_LE(std::abs(s.lhs - s.rhs), 1e-12 * (1 + std::abs(s.lhs))) << "j=" << j;
  }
}

INSTANTIATE_TEST_SUITE_P(Q, SumIdentitySweep, ::testing::Values(1.01, 1.1, 1.5, 2.0));
