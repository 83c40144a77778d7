#pragma once

// Exact points and axis-aligned rectangles over Q(phi).

#include <optional>
#include <string>
#include <vector>

#include "phitile/golden.hpp"

namespace phitile {

struct GoldenPoint {
  GoldenNumber x;
  GoldenNumber y;

  friend bool operator==(const GoldenPoint&, const GoldenPoint&) = default;
};

enum class Orientation { landscape, portrait, square };

std::string to_string(Orientation o);
Orientation orientation_from_string(const std::string& s);

struct GoldenRect {
  GoldenPoint lo;  // lower-left
  GoldenPoint hi;  // upper-right
  // Present when the rect is exactly phi^width_exp by phi^height_exp.
  std::optional<int> width_exp;
  std::optional<int> height_exp;

  /// Rect with lower-left `lo` and dimensions phi^w x phi^h, tagged.
  static GoldenRect with_exponents(const GoldenPoint& lo, int w, int h);

  GoldenNumber width() const { return hi.x - lo.x; }
  GoldenNumber height() const { return hi.y - lo.y; }
  GoldenNumber area() const { return width() * height(); }
  bool tagged() const { return width_exp.has_value() && height_exp.has_value(); }
  Orientation orientation() const;

  friend bool operator==(const GoldenRect&, const GoldenRect&) = default;
};

/// Checks positivity and, when tagged, exact agreement with the exponent tags.
bool is_valid(const GoldenRect& r);

/// Lexicographic by exact lo.x, lo.y, then hi.x, hi.y.
bool canonical_less(const GoldenRect& a, const GoldenRect& b);

/// True when the open interiors intersect.
bool interiors_overlap(const GoldenRect& a, const GoldenRect& b);

/// Closed containment: inner lies within outer.
bool contains(const GoldenRect& outer, const GoldenRect& inner);

GoldenRect scaled(const GoldenRect& r, int phi_exp);
/// Mirror about y = x.
GoldenRect reflected(const GoldenRect& r);

/// Point lies exactly on the ray y = phi^k x, x >= 0.
bool on_ray(const GoldenPoint& p, int k);

/// Convex polygon given counter-clockwise; closed containment test.
bool polygon_contains(const std::vector<GoldenPoint>& ccw, const GoldenPoint& p);

}  // namespace phitile
