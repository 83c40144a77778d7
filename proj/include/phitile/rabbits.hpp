#pragma once

// Fibonacci rabbit genealogy and two self-similar tilings whose month-k
// tiles number F_k: squares in a right triangle, golden rectangles in a
// trapezoid.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phitile/geometry.hpp"

namespace phitile {

struct RabbitPair {
  int id = 0;
  std::optional<int> parent_id;
  int birth_month = 1;

  friend bool operator==(const RabbitPair&, const RabbitPair&) = default;
};

enum class RabbitShape { triangle, trapezoid };

std::string to_string(RabbitShape s);
RabbitShape rabbit_shape_from_string(const std::string& s);

struct RabbitTile {
  int pair_id = 0;
  int month = 1;
  GoldenRect rect;

  friend bool operator==(const RabbitTile&, const RabbitTile&) = default;
};

struct RabbitTiling {
  RabbitShape shape = RabbitShape::triangle;
  int months = 0;
  std::vector<GoldenPoint> region;  // counter-clockwise
  std::vector<RabbitTile> tiles;

  friend bool operator==(const RabbitTiling&, const RabbitTiling&) = default;
};

struct TilingReport {
  std::vector<std::int64_t> counts;  // counts[k-1] = tiles of month k
  bool counts_ok = false;
  bool dims_ok = false;
  std::size_t overlaps = 0;
  std::size_t containment_violations = 0;
  GoldenNumber covered_area;
  GoldenNumber term_sum;     // sum_k F_k * (month-k tile area)
  GoldenNumber series_area;  // rhs - exact residual of the Fibonacci-weighted series
  GoldenNumber region_area;
  bool area_ok = false;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

namespace rabbits {

/// Pairs born through `months`, ids in (birth_month, parent_id) order.
/// Throws std::invalid_argument when months < 1.
std::vector<RabbitPair> breed(int months);

/// alive[k-1] = pairs alive in month k.
std::vector<std::int64_t> alive_counts(const std::vector<RabbitPair>& pairs, int months);

RabbitTiling layout_triangle(int months);
RabbitTiling layout_trapezoid(int months);

/// Counts, tile shapes, pairwise overlap, containment and the exact area identity.
TilingReport verify_tiling(const RabbitTiling& t);
/// Serial variant of the pairwise checks in verify_tiling.
TilingReport verify_tiling_serial(const RabbitTiling& t);

/// Series offset n whose Fibonacci-weighted sum the tiling realises
/// (-3 for the triangle, -2 for the trapezoid).
int series_offset(RabbitShape s);

/// Triangle: the corner of each square lying on the hypotenuse, tile order.
std::vector<GoldenPoint> hypotenuse_contacts(const RabbitTiling& t);

/// Trapezoid: convergence point of every pair, indexed by pair id.
std::vector<GoldenPoint> convergence_points(const std::vector<RabbitPair>& pairs);

/// Exact area of a simple polygon (shoelace).
GoldenNumber polygon_area(const std::vector<GoldenPoint>& pts);

}  // namespace rabbits

}  // namespace phitile
