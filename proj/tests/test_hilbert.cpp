#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "qmink/hilbert.hpp"

using namespace qmink;

namespace {

TruncationWindow window(int j_max, int n_lo, int n_hi, int M_lo, int M_hi, int margin = 0) {
  TruncationWindow w;
  w.j_max = j_max;
  w.n_lo = n_lo;
  w.n_hi = n_hi;
  w.M_lo = M_lo;
  w.M_hi = M_hi;
  w.margin = margin;
  return w;
}

}  // namespace

TEST(Sector, Parsing) {
  EXPECT_EQ(parse_sector("space"), SectorKind::SpaceLike);
  EXPECT_EQ(parse_sector("time+"), SectorKind::TimeLikeForward);
  EXPECT_EQ(parse_sector("time-"), SectorKind::TimeLikeBackward);
  EXPECT_EQ(parse_sector("light"), SectorKind::LightLike);
  EXPECT_THROW(parse_sector("lightlike"), std::invalid_argument);
}

TEST(Sector, ScaleRange) {
  const DeformationParams p(1.1);
  EXPECT_NO_THROW(Sector(SectorKind::SpaceLike, 1.0).validate(p));
  EXPECT_NO_THROW(Sector(SectorKind::TimeLikeForward, 1.05).validate(p));
  EXPECT_THROW(Sector(SectorKind::TimeLikeForward, 1.1).validate(p), std::invalid_argument);
  EXPECT_THROW(Sector(SectorKind::SpaceLike, 0.99).validate(p), std::invalid_argument);
  EXPECT_NO_THROW(Sector(SectorKind::LightLike, 7.0).validate(p));
  EXPECT_THROW(Sector(SectorKind::LightLike, 0.0), std::invalid_argument);
}

TEST(Enumerate, TimeLikeSmall) {
  const BasisMap b = enumerate_basis(Sector(SectorKind::TimeLikeForward, 1), window(1, 0, 1, 0, 0));
  const std::vector<BasisLabel> want{{0, 0, 0, 0}, {0, 0, 1, 0}, {1, -1, 1, 0}, {1, 0, 1, 0}, {1, 1, 1, 0}};
  EXPECT_EQ(b.labels(), want);
}

TEST(Enumerate, SpaceAndLightSizes) {
  EXPECT_EQ(enumerate_basis(Sector(SectorKind::SpaceLike, 1), window(0, -1, 1, 0, 0)).size(), 3u);
  const BasisMap l = enumerate_basis(Sector(SectorKind::LightLike, 1), window(0, 0, 2, -3, 3));
  EXPECT_EQ(l.size(), 3u);
  for (const auto& lab : l.labels()) EXPECT_EQ(lab.M, 0);
}

TEST(Enumerate, OrderAndBijection) {
  const BasisMap b = enumerate_basis(Sector(SectorKind::SpaceLike, 1), window(2, -2, 2, -1, 1));
  EXPECT_TRUE(std::is_sorted(b.labels().begin(), b.labels().end(), [](const BasisLabel& x, const BasisLabel& y) {
    return std::tie(x.M, x.n, x.j, x.m) < std::tie(y.M, y.n, y.j, y.m);
  }));
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b.index_of(b.label(i)), i);
  EXPECT_EQ(b.size(), 3u * 5u * 9u);
  EXPECT_FALSE(b.index_of({3, 0, 0, 0}).has_value());
}

TEST(Enumerate, EmptyWindowThrows) {
  EXPECT_THROW(enumerate_basis(Sector(SectorKind::TimeLikeForward, 1), window(2, -5, -1, 0, 0)),
               std::invalid_argument);
}

TEST(Interior, ZeroBudgetIsEverything) {
  const BasisMap b = enumerate_basis(Sector(SectorKind::SpaceLike, 1), window(2, -3, 3, -1, 1));
  EXPECT_EQ(interior_indices(b, {}).size(), b.size());
}

TEST(Interior, NShrink) {
  const BasisMap b = enumerate_basis(Sector(SectorKind::SpaceLike, 1), window(0, -5, 5, 0, 0));
  const auto in = interior_indices(b, {0, 0, 2, 0});
  ASSERT_EQ(in.size(), 7u);
  for (auto i : in) EXPECT_LE(std::abs(b.label(i).n), 3);
}

TEST(Interior, MonotoneInBudget) {
  const BasisMap b = enumerate_basis(Sector(SectorKind::TimeLikeForward, 1), window(4, 0, 8, -2, 2));
  const auto small = interior_indices(b, {1, 0, 1, 0});
  const auto big = interior_indices(b, {2, 0, 2, 1});
  EXPECT_TRUE(std::includes(small.begin(), small.end(), big.begin(), big.end()));
  EXPECT_LT(big.size(), small.size());
}

TEST(Interior, TimeLikeMatchesBruteForce) {
  const Sector s(SectorKind::TimeLikeForward, 1);
  const TruncationWindow w = window(3, 0, 6, 0, 0);
  const BasisMap b = enumerate_basis(s, w);
  const auto in = interior_indices(b, {1, 0, 1, 0});
  std::set<std::size_t> got(in.begin(), in.end());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const BasisLabel& l = b.label(i);
    bool ok = true;
    for (int dj = -1; dj <= 1; ++dj)
      for (int dn = -1; dn <= 1; ++dn) {
        const int j = l.j + dj, n = l.n + dn;
        const bool physical = j >= 0 && n >= 0 && j <= n;
        if (physical && (j > w.j_max || n > w.n_hi)) ok = false;
      }
    EXPECT_EQ(got.count(i) == 1, ok) << l.str();
  }
  // j = n states stay interior when n < n_hi: their j+1 neighbour at n is unphysical.
  EXPECT_TRUE(got.count(*b.index_of({2, 0, 2, 0})));
}

TEST(Interior, MarginShrinks) {
  const BasisMap plain = enumerate_basis(Sector(SectorKind::SpaceLike, 1), window(3, -4, 4, 0, 0));
  const BasisMap wide = enumerate_basis(Sector(SectorKind::SpaceLike, 1), window(3, -4, 4, 0, 0, 1));
  EXPECT_LT(interior_indices(wide, {1, 0, 1, 0}).size(), interior_indices(plain, {1, 0, 1, 0}).size());
  EXPECT_TRUE(interior_indices(enumerate_basis(Sector(SectorKind::SpaceLike, 1), window(0, -3, 3, 0, 0, 2)),
                               {2, 0, 0, 0})
                  .empty());
}

TEST(Spectrum, Apexes) {
  const DeformationParams p(1.1);
  const auto t = spectrum_points(Sector(SectorKind::TimeLikeForward, 1), 0, 0, 0, 0, p);
  EXPECT_NEAR(t[0].t, 1.0, 1e-15);
  EXPECT_NEAR(t[0].r, 0.0, 1e-15);
  const auto s = spectrum_points(Sector(SectorKind::SpaceLike, 1), 0, 0, 0, 0, p);
  EXPECT_NEAR(s[0].t, 0.0, 1e-15);
  EXPECT_NEAR(s[0].r, 1.0, 1e-15);
  const auto l = spectrum_points(Sector(SectorKind::LightLike, 1), 3, 3, 0, 0, p);
  EXPECT_NEAR(l[0].t, 1.331, 1e-14);
  EXPECT_NEAR(l[0].r, 1.331, 1e-14);
  EXPECT_THROW(spectrum_points(Sector(SectorKind::TimeLikeForward, 1), -1, 3, 0, 0, p), std::invalid_argument);
}

TEST(Spectrum, InvariantLengthAndScaling) {
  const DeformationParams p(1.1);
  for (auto kind : {SectorKind::SpaceLike, SectorKind::TimeLikeForward, SectorKind::TimeLikeBackward}) {
    const Sector s(kind, 1.05);
    const int lo = s.time_like() ? 0 : -15;
    for (const auto& pt : spectrum_points(s, lo, 20, -3, 3, p)) {
      const double s2 = s.invariant_length(pt.M, p);
      const double want = (kind == SectorKind::SpaceLike ? -1 : 1) * std::pow(1.05 * std::pow(1.1, pt.M), 2);
      EXPECT_NEAR(s2, want, 1e-12 * std::abs(want));
      EXPECT_NEAR(pt.t * pt.t - pt.r * pt.r, want, 1e-12 * (pt.t * pt.t + pt.r * pt.r));
      if (pt.M < 3) {
        EXPECT_NEAR(s.t(pt.n, pt.M + 1, p), 1.1 * pt.t, 1e-12 * (1 + std::abs(pt.t)));
        EXPECT_NEAR(std::sqrt(s.r2(pt.n, pt.M + 1, p)), 1.1 * pt.r, 1e-12 * (1 + pt.r));
      }
    }
  }
}

TEST(Spectrum, LightConeAccumulation) {
  const DeformationParams p(1.1);
  const auto pts = spectrum_points(Sector(SectorKind::TimeLikeForward, 1), 1, 40, 0, 0, p);
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LT(pts[i].t / pts[i].r, pts[i - 1].t / pts[i - 1].r);
  // {41} / (lambda sqrt([42][40])), evaluated in extended precision
  EXPECT_NEAR(pts.back().t / pts.back().r, 1.00081460870520250061622274798, 1e-12);
  EXPECT_LE(std::abs(pts.back().t / pts.back().r - 1), 2e-3);
}

TEST(SpectralCondition, TimeLikeAdjacent) {
  const DeformationParams p(1.1);
  const double b2 = bracket(2, p);
  for (int n = 0; n < 30; ++n) {
    const double tp = curly(n + 1, p) / b2;
    const double t = curly(n + 2, p) / b2;
    const double rp = std::sqrt(tp * tp - 1.0);
    EXPECT_LE(std::abs(check_spectral_condition(t, tp, rp, 1.0, p)), 1e-12) << n;
  }
}

TEST(SpectralCondition, ApexPair) {
  const DeformationParams p(1.1);
  const double up = curly(2, p) / bracket(2, p);
  EXPECT_LE(std::abs(check_spectral_condition(up, 1.0, 0.0, 1.0, p)), 1e-15);
  // (1 - 2/[2])(1 - {2}/[2]) / 2 for the non-adjacent pair t = t' = 1
  EXPECT_NEAR(check_spectral_condition(1.0, 1.0, 0.0, 1.0, p),
              std::abs((1 - 2 / bracket(2, p)) * (1 - curly(2, p) / bracket(2, p))) / 2, 1e-16);
  const auto [lo, hi] = adjacent_times(1.0, 1.0, p);
  EXPECT_NEAR(hi, up, 1e-14);
  EXPECT_NEAR(lo, 2 / bracket(2, p), 1e-14);
}

TEST(SpectralCondition, AllSectorsAllPairs) {
  const DeformationParams p(1.1);
  for (auto kind : {SectorKind::SpaceLike, SectorKind::TimeLikeForward, SectorKind::TimeLikeBackward,
                    SectorKind::LightLike}) {
    const Sector s(kind, 1.0);
    const int lo = s.time_like() ? 0 : -20;
    for (int M = -2; M <= 2; ++M) {
      const double s2 = s.invariant_length(M, p);
      for (int n = lo; n < 20; ++n) {
        const double tp = s.t(n, M, p);
        const double rp = std::sqrt(std::max(0.0, s.r2(n, M, p)));
        const double scale = 1 + tp * tp;
        EXPECT_LE(std::abs(check_spectral_condition(s.t(n + 1, M, p), tp, rp, s2, p)), 1e-12 * scale);
        if (n > lo) EXPECT_LE(std::abs(check_spectral_condition(s.t(n - 1, M, p), tp, rp, s2, p)), 1e-12 * scale);
      }
    }
  }
}

TEST(SpectralCondition, NonAdjacentPairsAreRejected) {
  const DeformationParams p(1.1);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  int far = 0;
  for (int i = 0; i < 200; ++i) {
    const double tp = u(rng) + 1.0;
    const double t = u(rng);
    const auto [a, b] = adjacent_times(tp, 1.0, p);
    if (std::min(std::abs(t - a), std::abs(t - b)) < 0.05) continue;
    EXPECT_GT(std::abs(check_spectral_condition(t, tp, std::sqrt(tp * tp - 1), 1.0, p)), 1e-6);
    ++far;
  }
  EXPECT_GT(far, 100);
}

TEST(SpectralCondition, InconsistentRPrimeThrows) {
  EXPECT_THROW(check_spectral_condition(1.0, 2.0, 0.5, 1.0, DeformationParams(1.1)), std::invalid_argument);
}

TEST(Rho, NonPositiveOnAdmissibleStates) {
  const DeformationParams p(1.1);
  for (auto kind : {SectorKind::SpaceLike, SectorKind::TimeLikeForward, SectorKind::LightLike}) {
    const Sector s(kind, 1.0);
    const int lo = s.time_like() ? 0 : -8;
    for (int n = lo; n <= 8; ++n)
      for (int j = 0; j <= 6; ++j) {
        if (!s.admissible(j, n)) continue;
        const double r = rho(j + 1, s.r2(n, 0, p), s.t(n, 0, p), p);
        EXPECT_LE(r, 1e-12 * (1 + s.r2(n, 0, p))) << sector_name(kind) << " n=" << n << " j=" << j;
      }
  }
}

TEST(Rho, PartialSumMatchesClosedForm) {
  for (double q : {1.01, 1.1, 1.5}) {
    const DeformationParams p(q);
    for (auto kind : {SectorKind::SpaceLike, SectorKind::TimeLikeForward, SectorKind::TimeLikeBackward,
                      SectorKind::LightLike}) {
      const Sector s(kind, 1.0);
      const int lo = s.time_like() ? 0 : -8;
      for (int n = lo; n <= 8; ++n)
        for (int j1 = 1; j1 <= 11; ++j1) {
          const double a = rho(j1, s.r2(n, 1, p), s.t(n, 1, p), p);
          EXPECT_NEAR(rho_partial_sum(j1, s.r2(n, 1, p), s.t(n, 1, p), p), a, 1e-12 * (1 + std::abs(a)));
          EXPECT_NEAR(rho_sector(s, j1, n, 1, p), a, 1e-12 * (1 + std::abs(a)));
        }
    }
  }
}
