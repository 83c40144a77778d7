#pragma once

// Alternating-power (AP) and every-power (EP) golden grids over a finite
// exponent window, the divider zig-zag and beaded rays.

#include <optional>
#include <string>
#include <vector>

#include "phitile/geometry.hpp"

namespace phitile {

enum class GridMode { ap, ep };
enum class Parity { even, odd };

std::string to_string(GridMode m);
std::string to_string(Parity p);

struct GridSpec {
  GridMode mode = GridMode::ap;
  Parity x_parity = Parity::even;  // AP only: exponent class carried by the x axis
  int min_exp = 0;
  int max_exp = 0;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct Tile {
  GoldenRect rect;
  std::optional<int> slope_exp;  // set when the tile is a bead on y = phi^k x

  friend bool operator==(const Tile&, const Tile&) = default;
};

enum class TileSetKind { ap_grid, ep_grid, subdivision };

std::string to_string(TileSetKind k);
TileSetKind tileset_kind_from_string(const std::string& s);

struct TileSet {
  TileSetKind kind = TileSetKind::subdivision;
  std::optional<GridSpec> grid;
  std::vector<Tile> tiles;  // canonical order

  std::vector<GoldenRect> rects() const;
  friend bool operator==(const TileSet&, const TileSet&) = default;
};

namespace tiling {

struct GridLines {
  std::vector<GoldenNumber> x;
  std::vector<GoldenNumber> y;
  std::vector<int> x_exps;
  std::vector<int> y_exps;
};

/// Throws std::invalid_argument when min_exp > max_exp.
GridLines grid_lines(const GridSpec& spec);

/// One tile per grid cell, tagged and classified. Throws when an axis has
/// fewer than two lines.
TileSet fundamental_tiles(const GridSpec& spec);

/// Serial reference for fundamental_tiles.
TileSet fundamental_tiles_serial(const GridSpec& spec);

/// Bounding rectangle of the window's grid lines.
GoldenRect window_rect(const GridSpec& spec);

enum class Direction { horizontal, vertical };

struct DividerSegment {
  GoldenPoint start;
  GoldenPoint end;
  GoldenNumber length;
  Direction direction;
};

struct DividerPath {
  int n = 0;
  // Ordered toward the origin: `ascending_count` segments beyond the anchor
  // B = (phi^n, phi^(n-1)), outermost first, then the descending segments
  // starting at B.
  std::vector<DividerSegment> segments;
  std::size_t ascending_count = 0;

  std::vector<DividerSegment> descending() const;
  std::vector<DividerSegment> ascending() const;
};

/// The zig-zag between y = phi x and y = phi^-1 x anchored at B.
DividerPath divider(int n, int steps_down, int steps_up = 0);

/// Empty when every divider invariant holds; otherwise human-readable failures.
std::vector<std::string> validate(const DividerPath& path);

struct BeadedRay {
  int slope_exp = 0;  // ray y = phi^slope_exp x
  int scale_exp = 2;  // consecutive beads scale by phi^scale_exp
  std::vector<GoldenRect> beads;
};

/// Beads [phi^a, phi^(a+2)] x [phi^(a+k), phi^(a+k+2)], a = first_exp + 2t.
/// In AP context k must be odd.
BeadedRay beaded_ray(int k, int first_exp, int count, GridMode context = GridMode::ap);

/// EP cells [phi^a, phi^(a+1)] x [phi^(a+k), phi^(a+k+1)], a = first_exp + t.
BeadedRay ep_beaded_ray(int k, int first_exp, int count);

std::vector<std::string> validate(const BeadedRay& ray);

enum class BeadRole { ap_bead, ep_bead, off_ray };

std::string to_string(BeadRole r);

struct TileClass {
  int slope_exp = 0;
  BeadRole role = BeadRole::off_ray;

  friend bool operator==(const TileClass&, const TileClass&) = default;
};

/// Throws std::invalid_argument for untagged rects.
TileClass classify_tile(const GoldenRect& rect);

// Windowed invariant helpers. Each returns a list of failures.

std::vector<std::string> check_partition(const TileSet& tiles, const GoldenRect& window);
std::vector<std::string> check_ap_uniqueness(const TileSet& ap);
std::vector<std::string> check_ep_pairing(const TileSet& ep);

/// Exact set equality of rects (ignores slope annotations and kind).
bool same_rects(const TileSet& a, const TileSet& b);

TileSet dilated(const TileSet& tiles, int phi_exp);
TileSet reflected(const TileSet& tiles);

/// Tiles whose rect lies inside `region`.
TileSet restricted(const TileSet& tiles, const GoldenRect& region);

}  // namespace tiling

}  // namespace phitile
