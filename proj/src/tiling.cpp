#include "phitile/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "phitile/kernels.hpp"

namespace phitile {

std::string to_string(GridMode m) { return m == GridMode::ap ? "ap" : "ep"; }

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::string to_string(TileSetKind k) {
  switch (k) {
    case TileSetKind::ap_grid:
      return "ap_grid";
    case TileSetKind::ep_grid:
      return "ep_grid";
    case TileSetKind::subdivision:
      return "subdivision";
  }
  return "subdivision";
}

TileSetKind tileset_kind_from_string(const std::string& s) {
  if (s == "ap_grid") return TileSetKind::ap_grid;
  if (s == "ep_grid") return TileSetKind::ep_grid;
  if (s == "subdivision") return TileSetKind::subdivision;
  throw std::invalid_argument("unknown tile set kind '" + s + "'");
}

std::vector<GoldenRect> TileSet::rects() const {
  std::vector<GoldenRect> out;
  out.reserve(tiles.size());
  for (const auto& t : tiles) out.push_back(t.rect);
  return out;
}

namespace tiling {

namespace {

bool is_odd(int e) { return (e % 2 + 2) % 2 == 1; }

bool has_parity(int e, Parity p) { return is_odd(e) == (p == Parity::odd); }

Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

void validate_window(const GridSpec& spec) {
  if (spec.min_exp > spec.max_exp) {
    throw std::invalid_argument("invalid window: min_exp " + std::to_string(spec.min_exp) +
                                " > max_exp " + std::to_string(spec.max_exp));
  }
}

// Width exponent of the gap starting at line phi^e.
int gap_exp(GridMode mode, int e) { return mode == GridMode::ap ? e + 1 : e - 1; }

std::vector<int> gap_exps(GridMode mode, const std::vector<int>& line_exps) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < line_exps.size(); ++i) out.push_back(gap_exp(mode, line_exps[i]));
  return out;
}

TileSet make_tileset(const GridSpec& spec, std::vector<GoldenRect> cells, bool parallel) {
  TileSet ts;
  ts.kind = spec.mode == GridMode::ap ? TileSetKind::ap_grid : TileSetKind::ep_grid;
  ts.grid = spec;
  ts.tiles.resize(cells.size());
  const auto n = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    auto& tile = ts.tiles[static_cast<std::size_t>(i)];
    tile.rect = std::move(cells[static_cast<std::size_t>(i)]);
    const TileClass c = classify_tile(tile.rect);
    if (c.role != BeadRole::off_ray) tile.slope_exp = c.slope_exp;
  }
  return ts;
}

void require_grid_cells(const GridLines& lines) {
  if (lines.x.size() < 2 || lines.y.size() < 2) {
    throw std::invalid_argument("window too small: need at least two grid lines per axis");
  }
}

std::pair<int, int> unordered(int p, int q) { return {std::min(p, q), std::max(p, q)}; }

}  // namespace

GridLines grid_lines(const GridSpec& spec) {
  validate_window(spec);
  GridLines lines;
  for (int e = spec.min_exp; e <= spec.max_exp; ++e) {
    const bool on_x = spec.mode == GridMode::ep || has_parity(e, spec.x_parity);
    const bool on_y = spec.mode == GridMode::ep || !has_parity(e, spec.x_parity);
    if (on_x) {
      lines.x.push_back(phi_pow(e));
      lines.x_exps.push_back(e);
    }
    if (on_y) {
      lines.y.push_back(phi_pow(e));
      lines.y_exps.push_back(e);
    }
  }
  return lines;
}

TileSet fundamental_tiles(const GridSpec& spec) {
  const GridLines lines = grid_lines(spec);
  require_grid_cells(lines);
  const auto wexps = gap_exps(spec.mode, lines.x_exps);
  const auto hexps = gap_exps(spec.mode, lines.y_exps);
  return make_tileset(spec, grid_cells(lines.x, wexps, lines.y, hexps), true);
}

TileSet fundamental_tiles_serial(const GridSpec& spec) {
  const GridLines lines = grid_lines(spec);
  require_grid_cells(lines);
  const auto wexps = gap_exps(spec.mode, lines.x_exps);
  const auto hexps = gap_exps(spec.mode, lines.y_exps);
  return make_tileset(spec, serial::grid_cells(lines.x, wexps, lines.y, hexps), false);
}

GoldenRect window_rect(const GridSpec& spec) {
  const GridLines lines = grid_lines(spec);
  require_grid_cells(lines);
  return {{lines.x.front(), lines.y.front()}, {lines.x.back(), lines.y.back()}, {}, {}};
}

// ---------------------------------------------------------------------------
// Divider

std::vector<DividerSegment> DividerPath::descending() const {
  return {segments.begin() + static_cast<std::ptrdiff_t>(ascending_count), segments.end()};
}

std::vector<DividerSegment> DividerPath::ascending() const {
  return {segments.begin(), segments.begin() + static_cast<std::ptrdiff_t>(ascending_count)};
}

DividerPath divider(int n, int steps_down, int steps_up) {
  if (steps_down < 1 || steps_up < 0) {
    throw std::invalid_argument("divider: steps_down must be >= 1 and steps_up >= 0");
  }
  const GoldenNumber inv_phi = phi_pow(-1);
  const GoldenNumber phi = phi_pow(1);

  DividerPath path;
  path.n = n;

  // Walk outward from B; each step yields the segment that ends at the
  // current point when traversed toward the origin.
  std::vector<DividerSegment> outward;
  GoldenPoint p{phi_pow(n), phi_pow(n - 1)};
  bool on_lower = true;
  for (int s = 0; s < steps_up; ++s) {
    DividerSegment seg;
    seg.end = p;
    if (on_lower) {
      seg.start = {p.x, phi * p.x};
      seg.direction = Direction::vertical;
      seg.length = seg.start.y - seg.end.y;
    } else {
      seg.start = {phi * p.y, p.y};
      seg.direction = Direction::horizontal;
      seg.length = seg.start.x - seg.end.x;
    }
    p = seg.start;
    on_lower = !on_lower;
    outward.push_back(std::move(seg));
  }
  std::reverse(outward.begin(), outward.end());
  path.segments = std::move(outward);
  path.ascending_count = path.segments.size();

  p = {phi_pow(n), phi_pow(n - 1)};
  on_lower = true;
  for (int s = 0; s < steps_down; ++s) {
    DividerSegment seg;
    seg.start = p;
    if (on_lower) {
      seg.end = {inv_phi * p.y, p.y};
      seg.direction = Direction::horizontal;
      seg.length = seg.start.x - seg.end.x;
    } else {
      seg.end = {p.x, inv_phi * p.x};
      seg.direction = Direction::vertical;
      seg.length = seg.start.y - seg.end.y;
    }
    p = seg.end;
    on_lower = !on_lower;
    path.segments.push_back(std::move(seg));
  }
  return path;
}

std::vector<std::string> validate(const DividerPath& path) {
  std::vector<std::string> failures;
  const GoldenNumber inv_phi = phi_pow(-1);
  const GoldenNumber phi = phi_pow(1);
  const auto& segs = path.segments;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    const std::string where = "segment " + std::to_string(i);
    const bool horizontal = s.direction == Direction::horizontal;
    if (horizontal ? s.start.y != s.end.y : s.start.x != s.end.x) {
      failures.push_back(where + " is not axis-parallel");
    }
    const GoldenNumber span = horizontal ? s.start.x - s.end.x : s.start.y - s.end.y;
    if (span != s.length || gn_sign(s.length) <= 0) {
      failures.push_back(where + " has inconsistent length");
    }
    // Horizontal segments run lower ray -> upper ray, vertical the reverse.
    const int start_ray = horizontal ? -1 : 1;
    if (!on_ray(s.start, start_ray) || !on_ray(s.end, -start_ray)) {
      failures.push_back(where + " endpoints are not on the bounding rays");
    }
    for (const auto* pt : {&s.start, &s.end}) {
      if (pt->y < inv_phi * pt->x || pt->y > phi * pt->x) {
        failures.push_back(where + " leaves the wedge");
      }
    }
    if (i > 0) {
      const auto& prev = segs[i - 1];
      if (prev.direction == s.direction) failures.push_back(where + " does not alternate direction");
      if (s.length != inv_phi * prev.length) failures.push_back(where + " breaks the phi^-1 ratio");
      if (!(prev.end == s.start)) failures.push_back(where + " is not connected");
    }
  }
  return failures;
}

// ---------------------------------------------------------------------------
// Beaded rays

BeadedRay beaded_ray(int k, int first_exp, int count, GridMode context) {
  if (count < 1) throw std::invalid_argument("beaded_ray: count must be >= 1");
  if (context == GridMode::ap && !is_odd(k)) {
    throw std::invalid_argument("beaded_ray: AP rays need an odd slope exponent, got " +
                                std::to_string(k));
  }
  BeadedRay ray;
  ray.slope_exp = k;
  ray.scale_exp = 2;
  for (int t = 0; t < count; ++t) {
    const int a = first_exp + 2 * t;
    ray.beads.push_back(GoldenRect::with_exponents({phi_pow(a), phi_pow(a + k)}, a + 1, a + k + 1));
  }
  return ray;
}

BeadedRay ep_beaded_ray(int k, int first_exp, int count) {
  if (count < 1) throw std::invalid_argument("ep_beaded_ray: count must be >= 1");
  BeadedRay ray;
  ray.slope_exp = k;
  ray.scale_exp = 1;
  for (int t = 0; t < count; ++t) {
    const int a = first_exp + t;
    ray.beads.push_back(GoldenRect::with_exponents({phi_pow(a), phi_pow(a + k)}, a - 1, a + k - 1));
  }
  return ray;
}

std::vector<std::string> validate(const BeadedRay& ray) {
  std::vector<std::string> failures;
  const GoldenNumber slope = phi_pow(ray.slope_exp);
  for (std::size_t t = 0; t < ray.beads.size(); ++t) {
    const auto& b = ray.beads[t];
    const std::string where = "bead " + std::to_string(t);
    if (!is_valid(b)) failures.push_back(where + " is not a valid rect");
    if (!on_ray(b.lo, ray.slope_exp) || !on_ray(b.hi, ray.slope_exp)) {
      failures.push_back(where + " has a corner off the ray");
    }
    if (b.height() != slope * b.width()) failures.push_back(where + " has the wrong aspect ratio");
    if (t > 0) {
      const GoldenRect expected = scaled(ray.beads[t - 1], ray.scale_exp);
      if (!(expected.lo == b.lo) || !(expected.hi == b.hi)) {
        failures.push_back(where + " is not the previous bead scaled by phi^" +
                           std::to_string(ray.scale_exp));
      }
    }
  }
  return failures;
}

std::string to_string(BeadRole r) {
  switch (r) {
    case BeadRole::ap_bead:
      return "AP-bead";
    case BeadRole::ep_bead:
      return "EP-bead";
    case BeadRole::off_ray:
      return "off-ray";
  }
  return "off-ray";
}

TileClass classify_tile(const GoldenRect& rect) {
  if (!rect.tagged()) throw std::invalid_argument("classify_tile: rect has no exponent tags");
  // A diagonal from lo to hi has slope phi^(h - w); it lies on a ray through
  // the origin iff lo does.
  const int aspect = *rect.height_exp - *rect.width_exp;
  TileClass c{aspect, BeadRole::off_ray};
  if (!on_ray(rect.lo, aspect) || !on_ray(rect.hi, aspect)) return c;
  const bool at_origin = rect.lo.x.is_zero();
  c.role = !at_origin && rect.hi.x == phi_pow(2) * rect.lo.x ? BeadRole::ap_bead : BeadRole::ep_bead;
  return c;
}

// ---------------------------------------------------------------------------
// Windowed invariants

std::vector<std::string> check_partition(const TileSet& tiles, const GoldenRect& window) {
  std::vector<std::string> failures;
  const auto rects = tiles.rects();
  for (std::size_t i = 0; i < rects.size(); ++i) {
    if (!is_valid(rects[i])) failures.push_back("tile " + std::to_string(i) + " is invalid");
    if (!contains(window, rects[i])) failures.push_back("tile " + std::to_string(i) + " leaves the window");
  }
  const auto overlaps = overlapping_pairs(rects);
  if (!overlaps.empty()) {
    failures.push_back(std::to_string(overlaps.size()) + " overlapping tile pairs");
  }
  if (total_area(rects) != window.area()) failures.push_back("tile areas do not sum to the window area");
  return failures;
}

std::vector<std::string> check_ap_uniqueness(const TileSet& ap) {
  std::vector<std::string> failures;
  if (ap.kind != TileSetKind::ap_grid || !ap.grid) return {"not an AP grid tile set"};
  std::map<std::pair<int, int>, int> seen;
  for (const auto& t : ap.tiles) {
    const int w = *t.rect.width_exp;
    const int h = *t.rect.height_exp;
    if (!is_odd(h - w)) failures.push_back("AP tile with even aspect exponent");
    ++seen[unordered(w, h)];
  }
  for (const auto& [dims, n] : seen) {
    if (n != 1) {
      failures.push_back("dimensions {" + std::to_string(dims.first) + "," +
                         std::to_string(dims.second) + "} appear " + std::to_string(n) + " times");
    }
  }
  const int lo = ap.grid->min_exp + 1;
  const int hi = ap.grid->max_exp - 1;
  for (int p = lo; p <= hi; ++p) {
    for (int q = p + 1; q <= hi; q += 2) {
      if (!seen.contains({p, q})) {
        failures.push_back("dimensions {" + std::to_string(p) + "," + std::to_string(q) + "} missing");
      }
    }
  }
  return failures;
}

std::vector<std::string> check_ep_pairing(const TileSet& ep) {
  std::vector<std::string> failures;
  if (ep.kind != TileSetKind::ep_grid || !ep.grid) return {"not an EP grid tile set"};
  // Tile exponents live in [min-1, max-2]; keep two exponents of margin.
  const int lo = ep.grid->min_exp + 1;
  const int hi = ep.grid->max_exp - 4;
  if (lo > hi) return {"window too small for an interior pairing check"};
  std::map<std::pair<int, int>, std::pair<int, int>> counts;  // -> (landscape, portrait/square)
  for (const auto& t : ep.tiles) {
    const auto o = t.rect.orientation();
    auto& c = counts[unordered(*t.rect.width_exp, *t.rect.height_exp)];
    (o == Orientation::landscape ? c.first : c.second)++;
  }
  for (int p = lo; p <= hi; ++p) {
    for (int q = p; q <= hi; ++q) {
      const auto c = counts[{p, q}];
      const std::string dims = "{" + std::to_string(p) + "," + std::to_string(q) + "}";
      if (p == q && (c.first != 0 || c.second != 1)) {
        failures.push_back("square " + dims + " does not appear exactly once");
      } else if (p != q && (c.first != 1 || c.second != 1)) {
        failures.push_back(dims + " does not appear once landscape and once portrait");
      }
    }
  }
  return failures;
}

bool same_rects(const TileSet& a, const TileSet& b) {
  auto ra = a.rects();
  auto rb = b.rects();
  sort_canonical(ra);
  sort_canonical(rb);
  return ra == rb;
}

TileSet dilated(const TileSet& tiles, int phi_exp) {
  TileSet out = tiles;
  for (auto& t : out.tiles) t.rect = scaled(t.rect, phi_exp);
  if (out.grid) {
    out.grid->min_exp += phi_exp;
    out.grid->max_exp += phi_exp;
    if (is_odd(phi_exp)) out.grid->x_parity = flip(out.grid->x_parity);
  }
  return out;
}

TileSet reflected(const TileSet& tiles) {
  TileSet out = tiles;
  for (auto& t : out.tiles) {
    t.rect = phitile::reflected(t.rect);
    if (t.slope_exp) *t.slope_exp = -*t.slope_exp;
  }
  std::stable_sort(out.tiles.begin(), out.tiles.end(),
                   [](const Tile& x, const Tile& y) { return canonical_less(x.rect, y.rect); });
  if (out.grid) out.grid->x_parity = flip(out.grid->x_parity);
  return out;
}

TileSet restricted(const TileSet& tiles, const GoldenRect& region) {
  TileSet out = tiles;
  out.tiles.clear();
  for (const auto& t : tiles.tiles) {
    if (contains(region, t.rect)) out.tiles.push_back(t);
  }
  return out;
}

}  // namespace tiling

}  // namespace phitile
