#include "phitile/subdivision.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "phitile/kernels.hpp"

namespace phitile::subdiv {

using tiling::BeadedRay;
using tiling::BeadRole;
using tiling::classify_tile;
using tiling::TileClass;

namespace {

void annotate(Tile& t) {
  const TileClass c = classify_tile(t.rect);
  t.slope_exp.reset();
  if (c.role != BeadRole::off_ray) t.slope_exp = c.slope_exp;
}

void sort_tiles(std::vector<Tile>& tiles) {
  std::stable_sort(tiles.begin(), tiles.end(),
                   [](const Tile& x, const Tile& y) { return canonical_less(x.rect, y.rect); });
}

void append_quad(std::vector<Tile>& out, SubdivisionQuad q) {
  for (auto* r : {&q.a, &q.b, &q.c, &q.d}) out.push_back(Tile{std::move(*r), {}});
}

}  // namespace

SubdivisionQuad subdivide(const GoldenRect& parent) {
  if (!parent.tagged()) throw std::invalid_argument("subdivide: parent has no exponent tags");
  const int i = *parent.width_exp;
  const int j = *parent.height_exp;
  const GoldenPoint& lo = parent.lo;
  const GoldenNumber xs = lo.x + phi_pow(i - 2);
  const GoldenNumber ys = lo.y + phi_pow(j - 2);
  return {
      GoldenRect::with_exponents({lo.x, ys}, i - 2, j - 1),
      GoldenRect::with_exponents(lo, i - 2, j - 2),
      GoldenRect::with_exponents({xs, ys}, i - 1, j - 1),
      GoldenRect::with_exponents({xs, lo.y}, i - 1, j - 2),
  };
}

std::vector<std::string> check_quad(const GoldenRect& parent, const SubdivisionQuad& q) {
  std::vector<std::string> failures;
  const int i = *parent.width_exp;
  const int j = *parent.height_exp;
  if (q.a.area() + q.b.area() + q.c.area() + q.d.area() != parent.area()) {
    failures.emplace_back("sub-rectangle areas do not sum to the parent area");
  }
  const int expected[4] = {j - i + 1, j - i, j - i, j - i - 1};
  const GoldenRect* parts[4] = {&q.a, &q.b, &q.c, &q.d};
  const char* names = "ABCD";
  for (int t = 0; t < 4; ++t) {
    const GoldenRect& r = *parts[t];
    const std::string name(1, names[t]);
    if (!is_valid(r)) failures.push_back(name + " is not a valid tagged rect");
    if (!contains(parent, r)) failures.push_back(name + " leaves the parent");
    if (r.height() != phi_pow(expected[t]) * r.width()) {
      failures.push_back(name + " diagonal slope is not phi^" + std::to_string(expected[t]));
    }
  }
  for (int s = 0; s < 4; ++s) {
    for (int t = s + 1; t < 4; ++t) {
      if (interiors_overlap(*parts[s], *parts[t])) failures.emplace_back("sub-rectangles overlap");
    }
  }
  return failures;
}

TileSet subdivide_all(const TileSet& tiles) {
  const auto n = static_cast<std::int64_t>(tiles.tiles.size());
  std::vector<Tile> out(tiles.tiles.size() * 4);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < n; ++s) {
    const auto idx = static_cast<std::size_t>(s);
    SubdivisionQuad q = subdivide(tiles.tiles[idx].rect);
    GoldenRect* parts[4] = {&q.a, &q.b, &q.c, &q.d};
    for (std::size_t t = 0; t < 4; ++t) {
      Tile& tile = out[4 * idx + t];
      tile.rect = std::move(*parts[t]);
      annotate(tile);
    }
  }
  sort_tiles(out);
  return {TileSetKind::subdivision, std::nullopt, std::move(out)};
}

TileSet subdivide_all_serial(const TileSet& tiles) {
  std::vector<Tile> out;
  for (const auto& t : tiles.tiles) append_quad(out, subdivide(t.rect));
  for (auto& t : out) annotate(t);
  sort_tiles(out);
  return {TileSetKind::subdivision, std::nullopt, std::move(out)};
}

TileSet subdivide_iter(const GoldenRect& parent, int depth) {
  if (depth < 0) throw std::invalid_argument("subdivide_iter: depth must be >= 0");
  TileSet ts{TileSetKind::subdivision, std::nullopt, {Tile{parent, {}}}};
  annotate(ts.tiles.front());
  for (int d = 0; d < depth; ++d) ts = subdivide_all(ts);
  return ts;
}

TileSet refine_ap_to_ep(const TileSet& ap_tiles) {
  if (ap_tiles.kind != TileSetKind::ap_grid || !ap_tiles.grid) {
    throw std::invalid_argument("refine_ap_to_ep: input is not an AP grid tile set");
  }
  for (const auto& t : ap_tiles.tiles) {
    if (!t.rect.tagged() || (*t.rect.height_exp - *t.rect.width_exp) % 2 == 0) {
      throw std::invalid_argument("refine_ap_to_ep: input is not an AP grid tile set");
    }
  }
  TileSet ep = subdivide_all(ap_tiles);
  ep.kind = TileSetKind::ep_grid;
  GridSpec spec = *ap_tiles.grid;
  spec.mode = GridMode::ep;
  ep.grid = spec;
  return ep;
}

BeadedRay merged_ray(const BeadedRay& upper, const BeadedRay& lower) {
  const int k = lower.slope_exp;
  if (upper.slope_exp != k + 2 || (k % 2) == 0 || upper.scale_exp != 2 || lower.scale_exp != 2) {
    throw std::invalid_argument("merged_ray: rays are not adjacent AP rays (slopes phi^k, phi^(k+2), k odd)");
  }
  BeadedRay merged;
  merged.slope_exp = k + 1;
  merged.scale_exp = 1;
  for (const auto& bead : upper.beads) merged.beads.push_back(subdivide(bead).d);
  for (const auto& bead : lower.beads) merged.beads.push_back(subdivide(bead).a);
  sort_canonical(merged.beads);
  return merged;
}

}  // namespace phitile::subdiv
