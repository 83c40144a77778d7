#include "phitile/rabbits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "phitile/kernels.hpp"
#include "phitile/series.hpp"

namespace phitile {

std::string to_string(RabbitShape s) { return s == RabbitShape::triangle ? "triangle" : "trapezoid"; }

RabbitShape rabbit_shape_from_string(const std::string& s) {
  if (s == "triangle") return RabbitShape::triangle;
  if (s == "trapezoid") return RabbitShape::trapezoid;
  throw std::invalid_argument("unknown rabbit shape '" + s + "'");
}

namespace rabbits {

namespace {

void require_months(int months) {
  if (months < 1) throw std::invalid_argument("need at least one month");
}

// (parent, birth month) -> child id
std::map<std::pair<int, int>, int> child_index(const std::vector<RabbitPair>& pairs) {
  std::map<std::pair<int, int>, int> idx;
  for (const auto& p : pairs) {
    if (p.parent_id) idx[{*p.parent_id, p.birth_month}] = p.id;
  }
  return idx;
}

std::vector<GoldenRect> rects_of(const RabbitTiling& t) {
  std::vector<GoldenRect> out;
  out.reserve(t.tiles.size());
  for (const auto& tile : t.tiles) out.push_back(tile.rect);
  return out;
}

void sort_tiles(std::vector<RabbitTile>& tiles) {
  std::stable_sort(tiles.begin(), tiles.end(), [](const RabbitTile& a, const RabbitTile& b) {
    if (a.month != b.month) return a.month < b.month;
    return a.pair_id < b.pair_id;
  });
}

template <class OverlapFn, class AreaFn>
TilingReport verify_with(const RabbitTiling& t, OverlapFn overlaps_of, AreaFn area_of) {
  TilingReport rep;
  const int K = t.months;
  rep.counts.assign(static_cast<std::size_t>(std::max(K, 0)), 0);

  rep.dims_ok = true;
  for (const auto& tile : t.tiles) {
    if (tile.month < 1 || tile.month > K) {
      rep.failures.push_back("tile with month " + std::to_string(tile.month) + " outside 1.." +
                             std::to_string(K));
      rep.dims_ok = false;
      continue;
    }
    ++rep.counts[static_cast<std::size_t>(tile.month - 1)];
    const int w = -tile.month - 1;
    const int h = t.shape == RabbitShape::triangle ? -tile.month - 1 : -tile.month;
    const GoldenRect& r = tile.rect;
    if (!is_valid(r) || r.width() != phi_pow(w) || r.height() != phi_pow(h)) rep.dims_ok = false;
  }
  if (!rep.dims_ok) rep.failures.emplace_back("tile dimensions do not match their month");

  rep.counts_ok = true;
  for (int k = 1; k <= K; ++k) {
    if (mpz_class(rep.counts[static_cast<std::size_t>(k - 1)]) != fibonacci(k)) rep.counts_ok = false;
  }
  if (!rep.counts_ok) rep.failures.emplace_back("monthly tile counts are not Fibonacci numbers");

  const auto rects = rects_of(t);
  rep.overlaps = overlaps_of(rects).size();
  if (rep.overlaps != 0) rep.failures.push_back(std::to_string(rep.overlaps) + " overlapping tile pairs");

  for (const auto& r : rects) {
    const GoldenPoint corners[4] = {r.lo, {r.hi.x, r.lo.y}, r.hi, {r.lo.x, r.hi.y}};
    if (!std::all_of(std::begin(corners), std::end(corners),
                     [&](const GoldenPoint& p) { return polygon_contains(t.region, p); })) {
      ++rep.containment_violations;
    }
  }
  if (rep.containment_violations != 0) {
    rep.failures.push_back(std::to_string(rep.containment_violations) + " tiles leave the region");
  }

  const int n = series_offset(t.shape);
  rep.covered_area = area_of(rects);
  for (int k = 1; k <= K; ++k) rep.term_sum += series::term(Formula::fib_weighted, n, k);
  if (K >= 1) {
    rep.series_area = series::rhs(Formula::fib_weighted, n) - series::closed_residual(Formula::fib_weighted, n, K);
  }
  rep.region_area = polygon_area(t.region);
  rep.area_ok = rep.covered_area == rep.term_sum && rep.covered_area == rep.series_area &&
                rep.region_area == series::rhs(Formula::fib_weighted, n);
  if (!rep.area_ok) rep.failures.emplace_back("covered area disagrees with the series identity");
  return rep;
}

}  // namespace

std::vector<RabbitPair> breed(int months) {
  require_months(months);
  std::vector<RabbitPair> pairs{{0, std::nullopt, 1}};
  for (int m = 2; m <= months; ++m) {
    const std::size_t existing = pairs.size();
    for (std::size_t i = 0; i < existing; ++i) {
      if (pairs[i].birth_month <= m - 2) {
        pairs.push_back({static_cast<int>(pairs.size()), pairs[i].id, m});
      }
    }
  }
  return pairs;
}

std::vector<std::int64_t> alive_counts(const std::vector<RabbitPair>& pairs, int months) {
  std::vector<std::int64_t> alive(static_cast<std::size_t>(std::max(months, 0)), 0);
  for (const auto& p : pairs) {
    for (int k = p.birth_month; k <= months; ++k) ++alive[static_cast<std::size_t>(k - 1)];
  }
  return alive;
}

int series_offset(RabbitShape s) { return s == RabbitShape::triangle ? -3 : -2; }

RabbitTiling layout_triangle(int months) {
  require_months(months);
  const auto pairs = breed(months);
  const auto children = child_index(pairs);

  RabbitTiling t;
  t.shape = RabbitShape::triangle;
  t.months = months;
  t.region = {{0, 0}, {1, 0}, {1, phi_pow(-1)}};

  // Sub-triangle with its right angle at `corner`, legs phi^e (base, leftward)
  // and phi^(e-1) (up). Its corner square has side phi^(e-2).
  struct Node {
    GoldenPoint corner;
    int e;
    int month;
    int pair;
  };
  std::vector<Node> stack{{{1, 0}, 0, 1, 0}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const GoldenNumber side = phi_pow(node.e - 2);
    const GoldenPoint lo{node.corner.x - side, node.corner.y};
    t.tiles.push_back({node.pair, node.month, GoldenRect::with_exponents(lo, node.e - 2, node.e - 2)});
    if (node.month + 1 <= months) {
      stack.push_back({lo, node.e - 1, node.month + 1, node.pair});
    }
    if (node.month + 2 <= months) {
      const int child = children.at({node.pair, node.month + 2});
      stack.push_back({{node.corner.x, node.corner.y + side}, node.e - 2, node.month + 2, child});
    }
  }
  sort_tiles(t.tiles);
  return t;
}

std::vector<GoldenPoint> convergence_points(const std::vector<RabbitPair>& pairs) {
  std::vector<GoldenPoint> c(pairs.size(), GoldenPoint{0, 0});
  // Parents precede children in id order.
  for (const auto& p : pairs) {
    if (!p.parent_id) continue;
    // Shift by the parent's tile of the month before the birth.
    const int m = p.birth_month;
    const GoldenPoint& base = c[static_cast<std::size_t>(*p.parent_id)];
    c[static_cast<std::size_t>(p.id)] = {base.x + phi_pow(-m), base.y + phi_pow(1 - m)};
  }
  return c;
}

RabbitTiling layout_trapezoid(int months) {
  require_months(months);
  const auto pairs = breed(months);
  const auto conv = convergence_points(pairs);

  RabbitTiling t;
  t.shape = RabbitShape::trapezoid;
  t.months = months;
  t.region = {{0, 0}, {1, 0}, {1, phi_pow(-1)}, {phi_pow(-2), phi_pow(-1)}};
  for (const auto& p : pairs) {
    const GoldenPoint& c = conv[static_cast<std::size_t>(p.id)];
    for (int j = p.birth_month; j <= months; ++j) {
      const GoldenPoint lo{c.x + phi_pow(-j), c.y};
      t.tiles.push_back({p.id, j, GoldenRect::with_exponents(lo, -j - 1, -j)});
    }
  }
  sort_tiles(t.tiles);
  return t;
}

TilingReport verify_tiling(const RabbitTiling& t) {
  return verify_with(
      t, [](const std::vector<GoldenRect>& r) { return overlapping_pairs(r); },
      [](const std::vector<GoldenRect>& r) { return total_area(r); });
}

TilingReport verify_tiling_serial(const RabbitTiling& t) {
  return verify_with(
      t, [](const std::vector<GoldenRect>& r) { return serial::overlapping_pairs(r); },
      [](const std::vector<GoldenRect>& r) { return serial::total_area(r); });
}

std::vector<GoldenPoint> hypotenuse_contacts(const RabbitTiling& t) {
  std::vector<GoldenPoint> out;
  out.reserve(t.tiles.size());
  for (const auto& tile : t.tiles) out.push_back({tile.rect.lo.x, tile.rect.hi.y});
  return out;
}

GoldenNumber polygon_area(const std::vector<GoldenPoint>& pts) {
  GoldenNumber twice;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % pts.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return GoldenNumber(mpq_class(1, 2), 0) * twice;
}

}  // namespace rabbits

}  // namespace phitile
