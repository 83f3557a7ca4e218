#include <gtest/gtest.h>

#include <cmath>

#include "qmink/tensors.hpp"

using namespace qmink;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Metric3, Entries) {
  const double q = 1.1;
  const Metric3 g = metric3(DeformationParams(q));
  EXPECT_DOUBLE_EQ(g.lower(kPlus, kMinus), -q);
  EXPECT_DOUBLE_EQ(g.lower(kMinus, kPlus), -1 / q);
  EXPECT_DOUBLE_EQ(g.lower(kThree, kThree), 1.0);
  EXPECT_EQ(g.lower(kPlus, kPlus), 0.0);
  EXPECT_EQ(g.lower, g.upper);
  EXPECT_LT(max_abs(g.lower * g.upper - Eigen::Matrix3d::Identity()), 1e-15);
  EXPECT_LT(max_abs(g.upper * g.lower - Eigen::Matrix3d::Identity()), 1e-15);
}

TEST(Metric4, InverseAndTimeComponent) {
  const Metric4 eta = metric4(DeformationParams(1.3));
  EXPECT_EQ(eta.lower(kZero, kZero), -1.0);
  EXPECT_EQ(eta.lower(kThree, kThree), 1.0);
  EXPECT_LT(max_abs(eta.lower * eta.upper - Eigen::Matrix4d::Identity()), 1e-15);
}

TEST(Epsilon3, ComponentList) {
  const double q = 1.1;
  const Epsilon3 e = epsilon3(DeformationParams(q));
  int nonzero = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) nonzero += e.mixed(a, b, c) != 0.0;
  EXPECT_EQ(nonzero, 7);
  EXPECT_DOUBLE_EQ(e.mixed(kPlus, kMinus, kThree), q);
  EXPECT_DOUBLE_EQ(e.mixed(kMinus, kPlus, kThree), -q);
  EXPECT_DOUBLE_EQ(e.mixed(kThree, kThree, kThree), 1 - q * q);
  EXPECT_DOUBLE_EQ(e.mixed(kPlus, kThree, kPlus), 1.0);
  EXPECT_DOUBLE_EQ(e.mixed(kThree, kPlus, kPlus), -q * q);
  EXPECT_DOUBLE_EQ(e.mixed(kMinus, kThree, kMinus), -q * q);
  EXPECT_DOUBLE_EQ(e.mixed(kThree, kMinus, kMinus), 1.0);
}

TEST(Epsilon3, LoweringAndRoundTrip) {
  const DeformationParams p(1.5);
  const Metric3 g = metric3(p);
  const Epsilon3 e = epsilon3(p);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        double v = 0;
        for (int d = 0; d < 3; ++d) v += g.lower(c, d) * e.mixed(a, b, d);
        EXPECT_NEAR(e.lower(a, b, c), v, 1e-15);
      }
  for (int slot = 0; slot < 3; ++slot) {
    EXPECT_LT(raise_index(lower_index(e.mixed, slot, g), slot, g).max_abs_diff(e.mixed), 1e-14);
    EXPECT_LT(lower_index(raise_index(e.lower, slot, g), slot, g).max_abs_diff(e.lower), 1e-14);
  }
}

TEST(ScalarProducts, Circ3) {
  const DeformationParams p(1.1);
  EXPECT_DOUBLE_EQ(circ3({0, 0, 1}, {0, 0, 1}, p), 1.0);
  EXPECT_DOUBLE_EQ(circ3({1, 0, 0}, {0, 1, 0}, p), -1.1);
}

TEST(ScalarProducts, Dot4) {
  const DeformationParams p(1.1);
  EXPECT_DOUBLE_EQ(dot4({0, 0, 0, 1}, {0, 0, 0, 1}, p), 1.0);
  EXPECT_DOUBLE_EQ(dot4({0, 0, 1, 0}, {0, 0, 1, 0}, p), -1.0);
  EXPECT_DOUBLE_EQ(dot4({1, 0, 0, 0}, {0, 1, 0, 0}, p), 1.1);
  const Metric4 eta = metric4(p);
  const std::array<double, 4> x{0.3, -1.2, 0.7, 2.0}, y{1.1, 0.4, -0.5, 0.9};
  double v = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) v -= eta.lower(a, b) * x[a] * y[b];
  EXPECT_NEAR(dot4(x, y, p), v, 1e-15);
}

TEST(RHat3, Entry3333) {
  const double q = 1.1;
  const FourIndexTensor r = build_rhat3(DeformationParams(q));
  EXPECT_NEAR(r(kThree, kThree, kThree, kThree), 0.826446280991735537190082644628, 1e-15);
}

TEST(RHat3, ThreeEigenvaluesAndBraid) {
  for (double q : {1.01, 1.1, 1.5}) {
    const FourIndexTensor r = build_rhat3(DeformationParams(q));
    const auto cl = eigenvalue_clusters(r);
    ASSERT_EQ(cl.size(), 3u) << "q=" << q;
    int total = 0;
    for (const auto& c : cl) total += c.multiplicity;
    EXPECT_EQ(total, 9);
    EXPECT_LE(braid_residual(r), 1e-12);
  }
}

TEST(RHat3, NearClassicalLimitIsPermutation) {
  const FourIndexTensor r = build_rhat3(DeformationParams(1 + 1e-9));
  Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(9, 9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) perm(a * 3 + b, b * 3 + a) = 1;
  // Classical epsilon identity turns the formula into the flip operator.
  EXPECT_LT(max_abs(r.matrix() * r.matrix() - Eigen::MatrixXd::Identity(9, 9)), 1e-7);
  EXPECT_LT(max_abs(r.matrix() - perm), 1e-7);
}

class Projectors : public ::testing::TestWithParam<double> {};

TEST_P(Projectors, IdempotentOrthogonalComplete) {
  const Projectors4 pr = build_projectors4(DeformationParams(GetParam()));
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(16, 16);
  const std::array<const Eigen::MatrixXd*, 4> ps{&pr.symmetric.matrix(), &pr.trace.matrix(), &pr.plus.matrix(),
                                                 &pr.minus.matrix()};
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(16, 16);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    EXPECT_LT(max_abs(*ps[i] * *ps[i] - *ps[i]), 1e-13) << i;
    for (std::size_t k = 0; k < ps.size(); ++k)
      if (k != i) EXPECT_LT(max_abs(*ps[i] * *ps[k]), 1e-13) << i << "," << k;
    sum += *ps[i];
  }
  EXPECT_LT(max_abs(sum - I), 1e-13);
  EXPECT_LT(max_abs(pr.antisymmetric.matrix() - pr.plus.matrix() - pr.minus.matrix()), 1e-15);
  EXPECT_NEAR(pr.trace.matrix().trace(), 1, 1e-12);
  EXPECT_NEAR(pr.plus.matrix().trace(), 3, 1e-12);
  EXPECT_NEAR(pr.minus.matrix().trace(), 3, 1e-12);
  EXPECT_NEAR(pr.symmetric.matrix().trace(), 9, 1e-12);
}

TEST_P(Projectors, RMatrices) {
  const DeformationParams p(GetParam());
  const double q = GetParam();
  const FourIndexTensor r1 = build_rmatrix4(RVariant::I, p);
  const FourIndexTensor r2 = build_rmatrix4(RVariant::II, p);
  const FourIndexTensor r2i = build_rmatrix4_inverse(RVariant::II, p);
  EXPECT_LT(max_abs(r2.matrix() * r2i.matrix() - Eigen::MatrixXd::Identity(16, 16)), 1e-13);
  EXPECT_LT(max_abs(r1.matrix() * build_rmatrix4_inverse(RVariant::I, p).matrix() - Eigen::MatrixXd::Identity(16, 16)),
            1e-13);
  EXPECT_LE(braid_residual(r1), 1e-12);
  EXPECT_LE(braid_residual(r2), 1e-12);

  const auto cl = eigenvalue_clusters(r1);
  ASSERT_EQ(cl.size(), 3u);
  EXPECT_NEAR(cl[0].value.real(), -q * q, 1e-12);
  EXPECT_EQ(cl[0].multiplicity, 3);
  EXPECT_NEAR(cl[1].value.real(), -1 / (q * q), 1e-12);
  EXPECT_EQ(cl[1].multiplicity, 3);
  EXPECT_NEAR(cl[2].value.real(), 1, 1e-12);
  EXPECT_EQ(cl[2].multiplicity, 10);
}

TEST_P(Projectors, Epsilon4) {
  const DeformationParams p(GetParam());
  const Projectors4 pr = build_projectors4(p);
  const Eigen::MatrixXd e = epsilon4(p).matrix();
  EXPECT_LT(max_abs(e * e - pr.antisymmetric.matrix()), 1e-13);
  EXPECT_NEAR(e.trace(), 0, 1e-13);
  EXPECT_LT(max_abs(e * pr.trace.matrix()), 1e-13);
}

INSTANTIATE_TEST_SUITE_P(Q, Projectors, ::testing::Values(1.01, 1.1, 1.5));

TEST(Projectors, TraceProjectorCorner) {
  const double q = 1.1;
  const Projectors4 pr = build_projectors4(DeformationParams(q));
  EXPECT_NEAR(pr.trace(kZero, kZero, kZero, kZero), 0.24774267521140025797997583997, 1e-15);
}
