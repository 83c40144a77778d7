#pragma once

// Golden split of a phi^i x phi^j rectangle into four power-of-phi
// sub-rectangles, smaller portion first on each axis.
//
//   +------+-----------+
//   |  A   |     C     |   A: phi^(i-2) x phi^(j-1)   slope phi^(j-i+1)
//   |      |           |   B: phi^(i-2) x phi^(j-2)   slope phi^(j-i)
//   +------+-----------+   C: phi^(i-1) x phi^(j-1)   slope phi^(j-i)
//   |  B   |     D     |   D: phi^(i-1) x phi^(j-2)   slope phi^(j-i-1)
//   +------+-----------+

#include <string>
#include <vector>

#include "phitile/tiling.hpp"

namespace phitile {

struct SubdivisionQuad {
  GoldenRect a;  // left column, top row
  GoldenRect b;  // left column, bottom row
  GoldenRect c;  // right column, top row
  GoldenRect d;  // right column, bottom row
};

namespace subdiv {

/// Throws std::invalid_argument for untagged parents.
SubdivisionQuad subdivide(const GoldenRect& parent);

/// Area conservation, tags, placement and the A/B/C/D slope table.
std::vector<std::string> check_quad(const GoldenRect& parent, const SubdivisionQuad& quad);

/// Applies one level of subdivision to every tile.
TileSet subdivide_all(const TileSet& tiles);
TileSet subdivide_all_serial(const TileSet& tiles);

/// 4^depth tiles in canonical order.
TileSet subdivide_iter(const GoldenRect& parent, int depth);

/// Subdivides every AP fundamental tile; the result is the EP grid on the
/// same region. Throws when the input is not an AP grid tile set.
TileSet refine_ap_to_ep(const TileSet& ap_tiles);

/// D sub-rects of the upper ray's beads interleaved with A sub-rects of the
/// lower ray's beads: an EP ray of slope phi^(k+1). Throws unless
/// upper.slope_exp == lower.slope_exp + 2 with lower.slope_exp odd.
tiling::BeadedRay merged_ray(const tiling::BeadedRay& upper, const tiling::BeadedRay& lower);

}  // namespace subdiv

}  // namespace phitile
