#pragma once

// Float scenes built from exact constructions, and a deterministic SVG 1.1
// writer. Coordinates are projected once, at >= 64 bits, then printed with
// 12 significant digits.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "phitile/rabbits.hpp"
#include "phitile/tiling.hpp"

namespace phitile::render {

struct RectShape {
  double x0, y0, x1, y1;
};
struct SegmentShape {
  double x0, y0, x1, y1;
};
struct PolygonShape {
  std::vector<std::pair<double, double>> points;
};
struct LabelShape {
  double x, y;
  std::string text;
};

using Geometry = std::variant<RectShape, SegmentShape, PolygonShape, LabelShape>;

struct Style {
  std::string fill = "none";
  std::string stroke = "#000000";
  double opacity = 1.0;
  double stroke_scale = 1.0;  // multiples of the base stroke width
  bool shaded = false;        // LG/PG highlight
};

struct Element {
  Geometry geometry;
  Style style;
  int layer = 0;
};

struct Viewport {
  double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
};

struct Scene {
  std::vector<Element> elements;
  Viewport viewport;
  std::string title;
};

/// Throws std::invalid_argument on an empty scene or degenerate viewport.
std::string render_svg(const Scene& scene);

double project(const GoldenNumber& x);

struct GridSceneOptions {
  bool rays = false;
  std::optional<int> divider_n;
  int divider_steps = 12;
};

/// Tiles coloured by aspect exponent; golden (aspect phi^+-1) tiles shaded.
Scene grid_scene(const TileSet& tiles, const GridSceneOptions& opts = {});

/// Tiles coloured by diagonal slope exponent.
Scene subdivision_scene(const TileSet& tiles);

/// Region outline plus one rect per tile, coloured by month.
Scene rabbit_scene(const RabbitTiling& t);

}  // namespace phitile::render
