#include "phitile/tiling.hpp"

#include <gtest/gtest.h>

#include <map>

namespace phitile {
namespace {

using tiling::BeadRole;
using tiling::Direction;

std::vector<GoldenNumber> powers(std::initializer_list<int> exps) {
  std::vector<GoldenNumber> out;
  for (int e : exps) out.push_back(phi_pow(e));
  return out;
}

TEST(GridLines, Examples) {
  auto ap = tiling::grid_lines({GridMode::ap, Parity::even, -2, 3});
  EXPECT_EQ(ap.x, powers({-2, 0, 2}));
  EXPECT_EQ(ap.y, powers({-1, 1, 3}));

  auto ep = tiling::grid_lines({GridMode::ep, Parity::even, 0, 2});
  EXPECT_EQ(ep.x, powers({0, 1, 2}));
  EXPECT_EQ(ep.y, powers({0, 1, 2}));

  auto degenerate = tiling::grid_lines({GridMode::ap, Parity::even, 0, 0});
  EXPECT_EQ(degenerate.x, powers({0}));
  EXPECT_TRUE(degenerate.y.empty());

  auto swapped = tiling::grid_lines({GridMode::ap, Parity::odd, -2, 3});
  EXPECT_EQ(swapped.x, powers({-1, 1, 3}));
  EXPECT_EQ(swapped.y, powers({-2, 0, 2}));
}

TEST(GridLines, InvalidWindowThrows) {
  EXPECT_THROW(tiling::grid_lines({GridMode::ap, Parity::even, 3, 2}), std::invalid_argument);
  EXPECT_THROW(tiling::fundamental_tiles({GridMode::ap, Parity::even, 0, 1}), std::invalid_argument);
}

const Tile* find_tile(const TileSet& ts, const GoldenPoint& lo) {
  for (const auto& t : ts.tiles) {
    if (t.rect.lo == lo) return &t;
  }
  return nullptr;
}

TEST(FundamentalTiles, Examples) {
  const auto ap = tiling::fundamental_tiles({GridMode::ap, Parity::even, -4, 4});
  const Tile* cell = find_tile(ap, {phi_pow(0), phi_pow(1)});
  ASSERT_NE(cell, nullptr);
  EXPECT_EQ(cell->rect.hi, (GoldenPoint{phi_pow(2), phi_pow(3)}));
  EXPECT_EQ(cell->rect.width_exp, 1);
  EXPECT_EQ(cell->rect.height_exp, 2);
  EXPECT_EQ(cell->rect.orientation(), Orientation::portrait);
  for (const auto& t : ap.tiles) {
    const int aspect = *t.rect.height_exp - *t.rect.width_exp;
    EXPECT_NE(aspect % 2, 0);
    EXPECT_TRUE(is_valid(t.rect));
  }

  const auto ep = tiling::fundamental_tiles({GridMode::ep, Parity::even, 0, 2});
  ASSERT_EQ(ep.tiles.size(), 4u);
  const Tile* sq = find_tile(ep, {phi_pow(0), phi_pow(0)});
  ASSERT_NE(sq, nullptr);
  EXPECT_EQ(sq->rect.width_exp, -1);
  EXPECT_EQ(sq->rect.height_exp, -1);
  EXPECT_EQ(sq->rect.orientation(), Orientation::square);
}

TEST(FundamentalTiles, CanonicalOrderAndSerialTwin) {
  for (GridMode mode : {GridMode::ap, GridMode::ep}) {
    const GridSpec spec{mode, Parity::even, -5, 5};
    const auto par = tiling::fundamental_tiles(spec);
    EXPECT_EQ(par, tiling::fundamental_tiles_serial(spec));
    for (std::size_t i = 1; i < par.tiles.size(); ++i) {
      EXPECT_TRUE(canonical_less(par.tiles[i - 1].rect, par.tiles[i].rect));
    }
  }
}

TEST(FundamentalTiles, PartitionWindow) {
  for (int w = 2; w <= 6; ++w) {
    for (GridMode mode : {GridMode::ap, GridMode::ep}) {
      for (Parity p : {Parity::even, Parity::odd}) {
        const GridSpec spec{mode, p, -w, w};
        const auto tiles = tiling::fundamental_tiles(spec);
        EXPECT_TRUE(tiling::check_partition(tiles, tiling::window_rect(spec)).empty());
        // Oracle: area equals (x_max - x_min)(y_max - y_min) computed from line values.
        const auto lines = tiling::grid_lines(spec);
        GoldenNumber area;
        for (const auto& t : tiles.tiles) area += t.rect.area();
        EXPECT_EQ(area, (lines.x.back() - lines.x.front()) * (lines.y.back() - lines.y.front()));
      }
    }
  }
}

TEST(FundamentalTiles, PartitionDetectsDefects) {
  const GridSpec spec{GridMode::ep, Parity::even, -3, 3};
  auto tiles = tiling::fundamental_tiles(spec);
  auto missing = tiles;
  missing.tiles.pop_back();
  EXPECT_FALSE(tiling::check_partition(missing, tiling::window_rect(spec)).empty());
  auto doubled = tiles;
  doubled.tiles.push_back(tiles.tiles.front());
  EXPECT_FALSE(tiling::check_partition(doubled, tiling::window_rect(spec)).empty());
}

TEST(Divider, Examples) {
  const auto path = tiling::divider(0, 6);
  ASSERT_EQ(path.segments.size(), 6u);
  EXPECT_EQ(path.segments[0].length, phi_pow(-1));
  EXPECT_EQ(path.segments[1].length, phi_pow(-2));
  EXPECT_EQ(path.segments[2].length, phi_pow(-3));
  EXPECT_EQ(path.segments[0].start, (GoldenPoint{phi_pow(0), phi_pow(-1)}));
  EXPECT_EQ(path.segments[0].direction, Direction::horizontal);
  EXPECT_TRUE(tiling::validate(path).empty());
  for (int n = -4; n <= 4; ++n) {
    const auto first = tiling::divider(n, 1);
    ASSERT_EQ(first.segments.size(), 1u);
    EXPECT_EQ(first.segments[0].length, phi_pow(n - 1));
  }
}

TEST(Divider, SumsMatchClosedForms) {
  // Descending segments from B: lengths phi^(n-1), phi^(n-2), ...; the horizontal
  // ones (phi^(n-1), phi^(n-3), ...) tend to phi^n, all of them to phi^(n+1).
  for (int n = -3; n <= 3; ++n) {
    const int K = 24;
    const auto path = tiling::divider(n, K);
    GoldenNumber horizontal, total;
    for (const auto& s : path.descending()) {
      total += s.length;
      if (s.direction == Direction::horizontal) horizontal += s.length;
    }
    EXPECT_EQ(phi_pow(n) - horizontal, phi_pow(n - K));
    EXPECT_EQ(phi_pow(n + 1) - total, phi_pow(n + 1 - K));
  }
}

TEST(Divider, AscendingSegmentsExtendOutward) {
  const auto path = tiling::divider(0, 4, 3);
  EXPECT_EQ(path.ascending_count, 3u);
  EXPECT_EQ(path.ascending().size(), 3u);
  EXPECT_EQ(path.descending().size(), 4u);
  EXPECT_TRUE(tiling::validate(path).empty());
  EXPECT_EQ(path.segments.front().length, phi_pow(2));
  EXPECT_EQ(path.descending().front().start, (GoldenPoint{phi_pow(0), phi_pow(-1)}));
}

TEST(Divider, ValidateCatchesBrokenPath) {
  auto path = tiling::divider(1, 5);
  path.segments[2].length = path.segments[2].length * GoldenNumber(2);
  EXPECT_FALSE(tiling::validate(path).empty());
  EXPECT_THROW(tiling::divider(0, 0), std::invalid_argument);
  EXPECT_THROW(tiling::divider(0, 3, -1), std::invalid_argument);
}

TEST(BeadedRay, Examples) {
  const auto pg = tiling::beaded_ray(1, 0, 3);
  EXPECT_EQ(pg.beads[0], GoldenRect::with_exponents({phi_pow(0), phi_pow(1)}, 1, 2));
  EXPECT_EQ(pg.beads[0].hi, (GoldenPoint{phi_pow(2), phi_pow(3)}));
  EXPECT_EQ(pg.beads[0].orientation(), Orientation::portrait);

  for (const auto& b : tiling::beaded_ray(-1, -4, 5).beads) EXPECT_EQ(b.orientation(), Orientation::landscape);
  for (const auto& b : tiling::beaded_ray(3, -6, 6).beads) EXPECT_EQ(b.height(), phi_pow(3) * b.width());
  EXPECT_THROW(tiling::beaded_ray(2, 0, 3), std::invalid_argument);
  EXPECT_NO_THROW(tiling::beaded_ray(2, 0, 3, GridMode::ep));
  EXPECT_THROW(tiling::beaded_ray(1, 0, 0), std::invalid_argument);
}

TEST(BeadedRay, CornersOnRayAndScaleFactor) {
  for (int k = -5; k <= 5; ++k) {
    const auto ray = tiling::beaded_ray(k, -10, 10, k % 2 ? GridMode::ap : GridMode::ep);
    EXPECT_TRUE(tiling::validate(ray).empty()) << k;
    for (std::size_t t = 0; t < ray.beads.size(); ++t) {
      const auto& b = ray.beads[t];
      EXPECT_EQ(b.lo.y, phi_pow(k) * b.lo.x);
      EXPECT_EQ(b.hi.y, phi_pow(k) * b.hi.x);
      if (t > 0) EXPECT_EQ(b.width(), phi_pow(2) * ray.beads[t - 1].width());
    }
    const auto ep = tiling::ep_beaded_ray(k, -10, 10);
    EXPECT_TRUE(tiling::validate(ep).empty()) << k;
  }
}

TEST(BeadedRay, ValidateRejectsOffRayBead) {
  auto ray = tiling::beaded_ray(1, 0, 3);
  ray.beads[1] = GoldenRect::with_exponents({phi_pow(2), phi_pow(2)}, 1, 2);
  EXPECT_FALSE(tiling::validate(ray).empty());
}

TEST(ClassifyTile, Examples) {
  EXPECT_EQ(tiling::classify_tile(GoldenRect::with_exponents({phi_pow(0), phi_pow(1)}, 1, 2)),
            (tiling::TileClass{1, BeadRole::ap_bead}));
  EXPECT_EQ(tiling::classify_tile(GoldenRect::with_exponents({0, 0}, 0, 0)),
            (tiling::TileClass{0, BeadRole::ep_bead}));
  // [phi, phi^2] x [1, phi]: lo = (phi, 1) and hi = (phi^2, phi) both lie on y = phi^-1 x.
  const auto ep_cell = GoldenRect::with_exponents({phi_pow(1), phi_pow(0)}, 0, -1);
  EXPECT_EQ(ep_cell.hi, (GoldenPoint{phi_pow(2), phi_pow(1)}));
  EXPECT_EQ(tiling::classify_tile(ep_cell), (tiling::TileClass{-1, BeadRole::ep_bead}));
  // A depth-2 subdivision piece whose corners are not on a common ray.
  const auto off = GoldenRect::with_exponents({phi_pow(1), phi_pow(0) + phi_pow(-3)}, 0, -1);
  EXPECT_EQ(tiling::classify_tile(off).role, BeadRole::off_ray);
  GoldenRect untagged{{0, 0}, {1, 1}, {}, {}};
  EXPECT_THROW(tiling::classify_tile(untagged), std::invalid_argument);
}

TEST(ClassifyTile, GridTilesAreAllBeads) {
  const auto ap = tiling::fundamental_tiles({GridMode::ap, Parity::even, -5, 5});
  for (const auto& t : ap.tiles) {
    const auto c = tiling::classify_tile(t.rect);
    EXPECT_EQ(c.role, BeadRole::ap_bead);
    EXPECT_EQ(t.slope_exp, c.slope_exp);
  }
  const auto ep = tiling::fundamental_tiles({GridMode::ep, Parity::even, -5, 5});
  for (const auto& t : ep.tiles) EXPECT_EQ(tiling::classify_tile(t.rect).role, BeadRole::ep_bead);
  EXPECT_EQ(to_string(BeadRole::ap_bead), "AP-bead");
  EXPECT_EQ(to_string(BeadRole::off_ray), "off-ray");
}

TEST(Windowed, UniquenessAndPairing) {
  for (int w = 3; w <= 6; ++w) {
    const auto ap = tiling::fundamental_tiles({GridMode::ap, Parity::even, -w, w});
    EXPECT_TRUE(tiling::check_ap_uniqueness(ap).empty()) << w;
    const auto ep = tiling::fundamental_tiles({GridMode::ep, Parity::even, -w, w});
    EXPECT_TRUE(tiling::check_ep_pairing(ep).empty()) << w;
  }
  // Independent count: every EP dimension pair {p,q} inside the window margin,
  // counted by orientation directly from the tiles.
  const auto ep = tiling::fundamental_tiles({GridMode::ep, Parity::even, -6, 6});
  std::map<std::pair<int, int>, int> landscape, portrait, square;
  for (const auto& t : ep.tiles) {
    const int w = *t.rect.width_exp, h = *t.rect.height_exp;
    if (w > h) ++landscape[{h, w}];
    else if (w < h) ++portrait[{w, h}];
    else ++square[{w, h}];
  }
  for (int p = -5; p <= 2; ++p) {
    EXPECT_EQ((square[{p, p}]), 1);
    for (int q = p + 1; q <= 2; ++q) {
      EXPECT_EQ((landscape[{p, q}]), 1);
      EXPECT_EQ((portrait[{p, q}]), 1);
    }
  }
  EXPECT_FALSE(tiling::check_ep_pairing(tiling::fundamental_tiles({GridMode::ep, Parity::even, -1, 2})).empty());
  EXPECT_FALSE(tiling::check_ap_uniqueness(ep).empty());
}

TEST(Windowed, DilatationAndReflection) {
  for (int w = 3; w <= 5; ++w) {
    const auto ap = tiling::fundamental_tiles({GridMode::ap, Parity::even, -w, w});
    const auto ep = tiling::fundamental_tiles({GridMode::ep, Parity::even, -w, w});
    for (int s : {-4, -2, 2, 4}) {
      EXPECT_TRUE(tiling::same_rects(tiling::dilated(ap, s),
                                     tiling::fundamental_tiles({GridMode::ap, Parity::even, -w + s, w + s})));
    }
    for (int s : {-3, -1, 1, 2}) {
      EXPECT_TRUE(tiling::same_rects(tiling::dilated(ep, s),
                                     tiling::fundamental_tiles({GridMode::ep, Parity::even, -w + s, w + s})));
    }
    EXPECT_TRUE(tiling::same_rects(tiling::reflected(ep), ep));
    EXPECT_FALSE(tiling::same_rects(tiling::reflected(ap), ap));
    EXPECT_TRUE(tiling::same_rects(tiling::dilated(tiling::reflected(ap), 1),
                                   tiling::fundamental_tiles({GridMode::ap, Parity::even, -w + 1, w + 1})));
    // An odd dilatation alone does not preserve the AP window.
    EXPECT_FALSE(tiling::same_rects(tiling::dilated(ap, 1),
                                    tiling::fundamental_tiles({GridMode::ap, Parity::even, -w + 1, w + 1})));
  }
}

}  // namespace
}  // namespace phitile
