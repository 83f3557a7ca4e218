#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "qmink/verify.hpp"

using namespace qmink;

namespace {

TruncationWindow window(SectorKind kind) {
  TruncationWindow w = TruncationWindow::defaults(kind);
  w.j_max = 3;
  if (kind == SectorKind::SpaceLike || kind == SectorKind::LightLike) {
    w.n_lo = -4;
    w.n_hi = 4;
  } else {
    w.n_hi = 7;
  }
  if (kind != SectorKind::LightLike) {
    w.M_lo = -2;
    w.M_hi = 2;
  }
  return w;
}

const RelationSpec& find(const std::vector<RelationSpec>& cat, const std::string& name) {
  auto it = std::find_if(cat.begin(), cat.end(), [&](const RelationSpec& r) { return r.name == name; });
  if (it == cat.end()) throw std::out_of_range(name);
  return *it;
}

}  // namespace

TEST(Catalog, Shape) {
  const DeformationParams p(1.1);
  const auto cat = relation_catalog(p);
  std::set<int> groups;
  std::set<std::string> names;
  for (const auto& r : cat) {
    groups.insert(r.group);
    names.insert(r.name);
    EXPECT_FALSE(r.group_title.empty());
    EXPECT_FALSE(r.sectors.empty());
  }
  EXPECT_EQ(static_cast<int>(groups.size()), kRelationGroups);
  EXPECT_GE(cat.size(), 60u);
  EXPECT_EQ(names.size(), cat.size());
}

TEST(Catalog, Budgets) {
  const DeformationParams p(1.1);
  const auto cat = relation_catalog(p);
  const OperatorSet ops(Sector(SectorKind::SpaceLike, 1), window(SectorKind::SpaceLike), p);
  EXPECT_EQ(evaluate(find(cat, "XX[+]"), ops, 1e-10).budget, (ShiftBudget{2, 1, 0, 0}));
  EXPECT_EQ(evaluate(find(cat, "XX[3]"), ops, 1e-10).budget, (ShiftBudget{2, 2, 0, 0}));
  const ShiftBudget px = find(cat, "PX[+-]").lhs.budget(ops).max(find(cat, "PX[+-]").rhs.budget(ops));
  EXPECT_GE(px.dM, 1);
  EXPECT_GE(px.dn, 1);
}

TEST(Evaluate, PassAndInconclusive) {
  const DeformationParams p(1.1);
  const auto cat = relation_catalog(p);
  const OperatorSet ops(Sector(SectorKind::SpaceLike, 1), window(SectorKind::SpaceLike), p);
  const ResidualReport r = evaluate(find(cat, "XX[+]"), ops, 1e-10);
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_GT(r.interior_dim, 0u);
  EXPECT_GT(r.normalization, 0.0);
  EXPECT_LE(r.normalized, 1e-10);

  TruncationWindow tiny = window(SectorKind::SpaceLike);
  tiny.j_max = 0;
  tiny.margin = 2;
  const OperatorSet small(Sector(SectorKind::SpaceLike, 1), tiny, p);
  EXPECT_EQ(evaluate(find(cat, "XX[+]"), small, 1e-10).status, Status::Inconclusive);

  const OperatorSet light(Sector(SectorKind::LightLike, 1), window(SectorKind::LightLike), p);
  EXPECT_EQ(evaluate(find(cat, "PP[+]"), light, 1e-10).status, Status::NotRepresentable);
}

TEST(Evaluate, ZeroToleranceFails) {
  const DeformationParams p(1.1);
  const auto cat = relation_catalog(p);
  const OperatorSet ops(Sector(SectorKind::SpaceLike, 1), window(SectorKind::SpaceLike), p);
  EXPECT_EQ(evaluate(find(cat, "U2"), ops, 0.0).status, Status::Fail);
  EXPECT_EQ(status_name(Status::Fail), "FAIL");
}

TEST(Evaluate, AllRelationsAllSectors) {
  for (double q : {1.05, 1.3}) {
    const DeformationParams p(q);
    const auto cat = relation_catalog(p);
    for (auto kind : {SectorKind::SpaceLike, SectorKind::TimeLikeForward, SectorKind::TimeLikeBackward,
                      SectorKind::LightLike}) {
      const OperatorSet ops(Sector(kind, 1), window(kind), p);
      for (const auto& r : evaluate_all(cat, ops, 1e-9, 2)) {
        EXPECT_NE(r.status, Status::Fail) << r.name << " " << sector_name(kind) << " q=" << q << " " << r.normalized;
        EXPECT_NE(r.status, Status::Inconclusive) << r.name << " " << sector_name(kind);
      }
    }
  }
}

TEST(Evaluate, SortedAndDeterministic) {
  const DeformationParams p(1.1);
  const auto cat = relation_catalog(p);
  const OperatorSet ops(Sector(SectorKind::TimeLikeForward, 1), window(SectorKind::TimeLikeForward), p);
  const auto a = evaluate_all(cat, ops, 1e-10, 1);
  const auto b = evaluate_all(cat, ops, 1e-10, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].max_residual, b[i].max_residual);
    if (i) EXPECT_LE(a[i - 1].group, a[i].group);
  }
}

TEST(CrossChecks, Rho) {
  const DeformationParams p(1.1);
  for (auto kind : {SectorKind::SpaceLike, SectorKind::TimeLikeForward, SectorKind::TimeLikeBackward,
                    SectorKind::LightLike}) {
    const Sector s(kind, 1);
    EXPECT_LE(rho_forms_difference(s, 5, -6, 6, -3, 3, p), 1e-12) << sector_name(kind);
    EXPECT_LE(rho_sector_difference(s, 5, -6, 6, -3, 3, p), 1e-12) << sector_name(kind);
  }
}

TEST(CrossChecks, Heisenberg) {
  for (double q : {1.1, 1.5}) {
    const DeformationParams p(q);
    for (auto kind : {SectorKind::SpaceLike, SectorKind::TimeLikeForward}) {
      const OperatorSet ops(Sector(kind, 1), window(kind), p);
      EXPECT_LE(heisenberg_formulation_difference(ops, p), 1e-12) << sector_name(kind) << " q=" << q;
    }
  }
}

TEST(CrossChecks, SpectralGap) {
  const DeformationParams p(1.1);
  const OperatorSet t(Sector(SectorKind::TimeLikeForward, 1), window(SectorKind::TimeLikeForward), p);
  const OperatorSet s(Sector(SectorKind::SpaceLike, 1), window(SectorKind::SpaceLike), p);
  EXPECT_GT(spectral_gap(t, s), 1e-12);
  EXPECT_EQ(spectral_gap(t, t), 0.0);
}

TEST(Obstruction, LightCone) {
  for (double q : {1.1, 1.5}) {
    const DeformationParams p(q);
    TruncationWindow w = TruncationWindow::defaults(SectorKind::LightLike);
    const OperatorSet ops(Sector(SectorKind::LightLike, 1), w, p);
    const ObstructionReport rep = lightcone_obstruction(ops);
    ASSERT_FALSE(rep.rows.empty());
    EXPECT_TRUE(rep.rank_deficient);
    EXPECT_GE(rep.min_inhomogeneity, 0.4);
    EXPECT_EQ(rep.verdict.rfind("no solution", 0), 0u);
    for (const auto& row : rep.rows) {
      EXPECT_NEAR(row.inhomogeneity, 1 / bracket(2, p), 1e-10);
      EXPECT_NEAR(row.u_element, 1 / bracket(2, p), 1e-12);
      EXPECT_LE(row.sigma_min, 1e-12 * row.sigma_max);
      EXPECT_LE(row.substitution_error, 1e-10 * (1 + row.compatibility));
    }
  }
  EXPECT_NEAR(1 / bracket(2, DeformationParams(1.1)), 0.497737556561086, 1e-12);
  EXPECT_NEAR(1 / bracket(2, DeformationParams(1.5)), 0.461538461538462, 1e-12);
  const DeformationParams p(1.1);
  const OperatorSet t(Sector(SectorKind::TimeLikeForward, 1), window(SectorKind::TimeLikeForward), p);
  EXPECT_THROW(lightcone_obstruction(t), std::invalid_argument);
}

TEST(Obstruction, SolvableOffTheCone) {
  for (double q : {1.1, 1.5}) {
    const DeformationParams p(q);
    const OperatorSet ops(Sector(SectorKind::TimeLikeForward, 1), window(SectorKind::TimeLikeForward), p);
    const MomentumSolveReport m = momentum_solve(ops);
    EXPECT_GT(m.systems, 0u);
    EXPECT_GT(m.min_relative_det, 1e-6);
    EXPECT_LE(m.max_p0_difference, 1e-10);
    EXPECT_LE(m.max_xp_difference, 1e-10);
  }
}

TEST(Limit, ClassicalCommutators) {
  TruncationWindow w = TruncationWindow::defaults(SectorKind::SpaceLike);
  w.j_max = 3;
  w.n_lo = -4;
  w.n_hi = 4;
  w.M_lo = -1;
  w.M_hi = 1;
  const auto rows = q_limit_probe({1.01, 1.001}, w);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_GT(rows[0].residual, 0.0);
  const double ratio = rows[0].residual / rows[1].residual;
  EXPECT_GE(ratio, 5.0);
  EXPECT_LE(ratio, 20.0);
}
