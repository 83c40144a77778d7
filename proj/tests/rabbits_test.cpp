#include "phitile/rabbits.hpp"
#include "phitile/series.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace phitile {
namespace {

// Oracle: population recurrence simulated on counts of (adult, newborn) pairs.
std::vector<std::int64_t> population(int months) {
  std::vector<std::int64_t> out;
  std::int64_t mature = 0, young = 1;
  for (int m = 1; m <= months; ++m) {
    out.push_back(mature + young);
    const std::int64_t born = mature;
    mature += young;
    young = born;
  }
  return out;
}

TEST(Breed, Examples) {
  EXPECT_EQ(rabbits::breed(1).size(), 1u);
  EXPECT_EQ(rabbits::alive_counts(rabbits::breed(6), 6), (std::vector<std::int64_t>{1, 1, 2, 3, 5, 8}));
  const auto three = rabbits::breed(3);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[1].parent_id, 0);
  EXPECT_EQ(three[1].birth_month, 3);
  EXPECT_THROW(rabbits::breed(0), std::invalid_argument);
}

TEST(Breed, CountsAreFibonacci) {
  const auto pairs = rabbits::breed(20);
  const auto alive = rabbits::alive_counts(pairs, 20);
  EXPECT_EQ(alive, population(20));
  EXPECT_EQ(alive.back(), 6765);
  for (const auto& p : pairs) {
    if (!p.parent_id) continue;
    EXPECT_LT(*p.parent_id, p.id);
    EXPECT_GE(p.birth_month, pairs[static_cast<std::size_t>(*p.parent_id)].birth_month + 2);
  }
}

TEST(Triangle, FirstMonths) {
  const auto one = rabbits::layout_triangle(1);
  ASSERT_EQ(one.tiles.size(), 1u);
  const auto& sq = one.tiles[0].rect;
  EXPECT_EQ(sq.lo, (GoldenPoint{phi_pow(-1), 0}));
  EXPECT_EQ(sq.hi, (GoldenPoint{1, phi_pow(-2)}));
  EXPECT_TRUE(on_ray({sq.lo.x, sq.hi.y}, -1));

  const auto three = rabbits::layout_triangle(3);
  ASSERT_EQ(three.tiles.size(), 4u);
  GoldenNumber area;
  for (const auto& t : three.tiles) area += t.rect.area();
  EXPECT_EQ(area, phi_pow(-4) + phi_pow(-6) + GoldenNumber(2) * phi_pow(-8));
}

TEST(Triangle, VerifiesAndContactsOrdered) {
  for (int K = 1; K <= 12; ++K) {
    const auto t = rabbits::layout_triangle(K);
    const auto rep = rabbits::verify_tiling(t);
    EXPECT_TRUE(rep.passed()) << K;
    EXPECT_EQ(rep.covered_area + series::closed_residual(Formula::fib_weighted, -3, K),
              GoldenNumber(mpq_class(1, 2), 0) * phi_pow(-1));
    for (const auto& p : rabbits::hypotenuse_contacts(t)) EXPECT_TRUE(on_ray(p, -1));
  }
  const auto six = rabbits::verify_tiling(rabbits::layout_triangle(6));
  EXPECT_EQ(six.counts, (std::vector<std::int64_t>{1, 1, 2, 3, 5, 8}));
}

TEST(Trapezoid, FirstTileAndEdges) {
  const auto one = rabbits::layout_trapezoid(1);
  ASSERT_EQ(one.tiles.size(), 1u);
  EXPECT_EQ(one.tiles[0].rect.lo, (GoldenPoint{phi_pow(-1), 0}));
  EXPECT_EQ(one.tiles[0].rect.hi, (GoldenPoint{1, phi_pow(-1)}));

  // Widths of the original pair's tiles along the base tend to |OR| = 1, and
  // the tiles touching the top edge tend to |PQ| = phi^-1.
  const int K = 16;
  const auto t = rabbits::layout_trapezoid(K);
  GoldenNumber base, top;
  for (const auto& tile : t.tiles) {
    if (tile.pair_id == 0) base += tile.rect.width();
    if (tile.rect.hi.y == phi_pow(-1)) top += tile.rect.width();
  }
  EXPECT_EQ(GoldenNumber(1) - base, phi_pow(-K));
  // Top tiles have widths phi^-2, phi^-4, ... from the pairs born in odd months.
  EXPECT_EQ(phi_pow(-1) - top, phi_pow(-2 * ((K + 1) / 2) - 1));
}

TEST(Trapezoid, ConvergencePointsOnPhiRay) {
  const auto pairs = rabbits::breed(14);
  const auto c = rabbits::convergence_points(pairs);
  ASSERT_EQ(c.size(), pairs.size());
  for (const auto& p : c) EXPECT_TRUE(on_ray(p, 1));
}

TEST(Trapezoid, ExactAreaIdentity) {
  for (int K = 1; K <= 12; ++K) {
    const auto rep = rabbits::verify_tiling(rabbits::layout_trapezoid(K));
    EXPECT_EQ(rep.overlaps, 0u);
    EXPECT_EQ(rep.containment_violations, 0u);
    EXPECT_TRUE(rep.counts_ok && rep.dims_ok && rep.area_ok);
    EXPECT_EQ(rep.covered_area + series::closed_residual(Formula::fib_weighted, -2, K), GoldenNumber(mpq_class(1, 2), 0));
  }
}

TEST(Trapezoid, FloatCoverageConvergesToHalf) {
  // Oracle: sum_{k<=K} F_k phi^(-2k-1) in long double.
  const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
  auto oracle = [&](int K) {
    long double s = 0, a = 0, b = 1;  // a = F_k
    for (int k = 1; k <= K; ++k) {
      const long double next = a + b;
      a = b;
      b = next;
      s += a * std::pow(phi, -2 * k - 1);
    }
    return s;
  };
  auto covered = [](int K) {
    GoldenNumber area;
    for (const auto& t : rabbits::layout_trapezoid(K).tiles) area += t.rect.area();
    return gn_to_float(area, 64).to_double();
  };
  for (int K : {1, 5, 10, 20}) EXPECT_NEAR(covered(K), static_cast<double>(oracle(K)), 1e-15);
  // The tail after K terms is (F_(K+1) phi^(-2K) + F_K phi^(-2K-2)) / 2, of order phi^-K,
  // so K = 10 sits about 3.6e-3 below one half.
  EXPECT_NEAR(covered(10), 0.4963638483803953, 1e-12);
  EXPECT_NEAR(covered(20), 0.5, 1e-4);
}

TEST(Verify, SerialMatchesParallel) {
  for (int K : {4, 9}) {
    for (const auto& t : {rabbits::layout_triangle(K), rabbits::layout_trapezoid(K)}) {
      const auto a = rabbits::verify_tiling(t);
      const auto b = rabbits::verify_tiling_serial(t);
      EXPECT_EQ(a.failures, b.failures);
      EXPECT_EQ(a.covered_area, b.covered_area);
      EXPECT_EQ(a.overlaps, b.overlaps);
    }
  }
}

TEST(Verify, DetectsDefects) {
  auto t = rabbits::layout_triangle(5);
  t.tiles.push_back(t.tiles.front());
  const auto rep = rabbits::verify_tiling(t);
  EXPECT_FALSE(rep.passed());
  EXPECT_GT(rep.overlaps, 0u);
  EXPECT_FALSE(rep.counts_ok);

  auto moved = rabbits::layout_trapezoid(4);
  moved.tiles.back().rect = GoldenRect::with_exponents({1, 0}, -5, -4);
  EXPECT_GT(rabbits::verify_tiling(moved).containment_violations, 0u);
}

TEST(PolygonArea, Regions) {
  EXPECT_EQ(rabbits::polygon_area(rabbits::layout_triangle(1).region), GoldenNumber(mpq_class(1, 2), 0) * phi_pow(-1));
  EXPECT_EQ(rabbits::polygon_area(rabbits::layout_trapezoid(1).region), GoldenNumber(mpq_class(1, 2), 0));
  EXPECT_EQ(to_string(RabbitShape::trapezoid), "trapezoid");
  EXPECT_THROW(rabbit_shape_from_string("circle"), std::invalid_argument);
}

}  // namespace
}  // namespace phitile
