#include "phitile/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "phitile/rabbits.hpp"
#include "phitile/series.hpp"
#include "phitile/subdivision.hpp"
#include "phitile/tiling.hpp"

namespace phitile {

namespace {

using Failures = std::vector<std::string>;

void append(Failures& into, const std::string& prefix, const Failures& from) {
  for (const auto& f : from) into.push_back(prefix + ": " + f);
}

Failures check_recursion() {
  Failures f;
  for (int n = -100; n <= 100; ++n) {
    if (phi_pow(n + 2) != phi_pow(n + 1) + phi_pow(n)) f.push_back("phi^(n+2) != phi^(n+1) + phi^n at n=" + std::to_string(n));
  }
  return f;
}

Failures check_series() {
  Failures f;
  for (Formula formula : {Formula::odd_powers, Formula::all_powers, Formula::fib_weighted, Formula::arith_weighted}) {
    for (int n = -5; n <= 5; ++n) {
      GoldenNumber naive;
      for (int K = 1; K <= 30; ++K) {
        naive += series::term(formula, n, K);
        const SeriesReport r = series::partial_sum(formula, n, K, 128);
        const std::string where = to_string(formula) + " n=" + std::to_string(n) + " K=" + std::to_string(K);
        if (!series::consistent(r)) f.push_back(where + ": partial + residual != rhs or residual <= 0");
        if (K <= 15 && r.residual != r.rhs - naive) f.push_back(where + ": residual disagrees with naive sum");
        if (r.residual - series::closed_residual(formula, n, K + 1) != series::term(formula, n, K + 1)) {
          f.push_back(where + ": residual step mismatch");
        }
      }
    }
  }
  const SeriesReport seq = series::sequent_instance(40);
  const double echo = std::stod(seq.float_echo);
  if (!(std::fabs(echo - 2.6180339887) < 1e-6)) f.push_back("sequent K=40 echo " + seq.float_echo);
  return f;
}

Failures check_pi() {
  Failures f;
  for (int n = -10; n <= 10; ++n) {
    const Certificate c = series::pi_quarter_certificate(n);
    for (const auto& fact : c.facts) {
      if (!fact.pass) f.push_back("n=" + std::to_string(n) + ": " + fact.description);
    }
  }
  return f;
}

Failures check_divider() {
  Failures f;
  const auto path = tiling::divider(0, 20, 0);
  append(f, "divider n=0", tiling::validate(path));
  if (path.segments.size() != 20) f.emplace_back("divider did not produce 20 segments");
  for (int n = -3; n <= 3; ++n) {
    for (int K = 1; K <= 20; ++K) {
      const auto sums = series::divider_sums_check(n, K);
      if (!sums.horizontal_match || !sums.total_match) {
        f.push_back("divider sums n=" + std::to_string(n) + " K=" + std::to_string(K));
      }
    }
  }
  return f;
}

Failures check_grids(int w) {
  Failures f;
  const GridSpec ap{GridMode::ap, Parity::even, -w, w};
  const GridSpec ep{GridMode::ep, Parity::even, -w, w};
  const TileSet ap_tiles = tiling::fundamental_tiles(ap);
  const TileSet ep_tiles = tiling::fundamental_tiles(ep);
  append(f, "AP partition", tiling::check_partition(ap_tiles, tiling::window_rect(ap)));
  append(f, "EP partition", tiling::check_partition(ep_tiles, tiling::window_rect(ep)));

  const TileSet refined = subdiv::refine_ap_to_ep(ap_tiles);
  const TileSet expected = tiling::restricted(ep_tiles, tiling::window_rect(ap));
  if (!tiling::same_rects(refined, expected)) f.emplace_back("refined AP window differs from direct EP construction");

  append(f, "AP uniqueness", tiling::check_ap_uniqueness(ap_tiles));
  append(f, "EP pairing", tiling::check_ep_pairing(ep_tiles));

  const GridSpec ap_shift2{GridMode::ap, Parity::even, -w + 2, w + 2};
  if (!tiling::same_rects(tiling::dilated(ap_tiles, 2), tiling::fundamental_tiles(ap_shift2))) {
    f.emplace_back("AP window not invariant under phi^2 dilatation");
  }
  const GridSpec ep_shift1{GridMode::ep, Parity::even, -w + 1, w + 1};
  if (!tiling::same_rects(tiling::dilated(ep_tiles, 1), tiling::fundamental_tiles(ep_shift1))) {
    f.emplace_back("EP window not invariant under phi dilatation");
  }
  if (!tiling::same_rects(tiling::reflected(ep_tiles), ep_tiles)) f.emplace_back("EP window not symmetric about y=x");
  const GridSpec ap_shift1{GridMode::ap, Parity::even, -w + 1, w + 1};
  if (!tiling::same_rects(tiling::dilated(tiling::reflected(ap_tiles), 1), tiling::fundamental_tiles(ap_shift1))) {
    f.emplace_back("AP window not invariant under reflection composed with phi dilatation");
  }
  return f;
}

Failures check_rays(int w) {
  Failures f;
  for (int k = -5; k <= 5; ++k) {
    const GridMode ctx = (k % 2 != 0) ? GridMode::ap : GridMode::ep;
    append(f, "ray k=" + std::to_string(k), tiling::validate(tiling::beaded_ray(k, -10, 10, ctx)));
    append(f, "EP ray k=" + std::to_string(k), tiling::validate(tiling::ep_beaded_ray(k, -10, 10)));
  }
  for (int k = -w - 1; k <= w - 1; ++k) {
    if (k % 2 == 0) continue;
    const auto upper = tiling::beaded_ray(k + 2, -w, w);
    const auto lower = tiling::beaded_ray(k, -w + 2, w);
    const auto merged = subdiv::merged_ray(upper, lower);
    const std::string where = "merged k=" + std::to_string(k);
    append(f, where, tiling::validate(merged));
    const auto direct = tiling::ep_beaded_ray(k + 1, -w + 1, 2 * w);
    if (merged.beads != direct.beads) f.push_back(where + ": differs from the EP ray");
  }
  return f;
}

Failures check_subdivision() {
  Failures f;
  for (int i = -4; i <= 4; ++i) {
    for (int j = -4; j <= 4; ++j) {
      const GoldenRect parent = GoldenRect::with_exponents({phi_pow(i), phi_pow(j)}, i, j);
      const std::string where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      TileSet level{TileSetKind::subdivision, std::nullopt, {Tile{parent, {}}}};
      for (int depth = 1; depth <= 3; ++depth) {
        for (const auto& t : level.tiles) append(f, where, subdiv::check_quad(t.rect, subdiv::subdivide(t.rect)));
        level = subdiv::subdivide_all(level);
        GoldenNumber area;
        for (const auto& t : level.tiles) area += t.rect.area();
        if (area != parent.area() || level.tiles.size() != (std::size_t{1} << (2 * depth))) {
          f.push_back(where + ": depth " + std::to_string(depth) + " breaks area or count");
        }
      }
    }
  }
  return f;
}

Failures check_rabbits(int months) {
  Failures f;
  const auto pairs = rabbits::breed(15);
  const auto alive = rabbits::alive_counts(pairs, 15);
  for (int k = 1; k <= 15; ++k) {
    if (mpz_class(alive[static_cast<std::size_t>(k - 1)]) != fibonacci(k)) {
      f.push_back("genealogy count wrong in month " + std::to_string(k));
    }
  }
  for (RabbitShape shape : {RabbitShape::triangle, RabbitShape::trapezoid}) {
    const auto big = shape == RabbitShape::triangle ? rabbits::layout_triangle(15) : rabbits::layout_trapezoid(15);
    std::vector<std::int64_t> counts(15, 0);
    for (const auto& t : big.tiles) ++counts[static_cast<std::size_t>(t.month - 1)];
    for (int k = 1; k <= 15; ++k) {
      if (mpz_class(counts[static_cast<std::size_t>(k - 1)]) != fibonacci(k)) {
        f.push_back(to_string(shape) + " tile count wrong in month " + std::to_string(k));
      }
    }
    for (int K = 1; K <= months; ++K) {
      const auto t = shape == RabbitShape::triangle ? rabbits::layout_triangle(K) : rabbits::layout_trapezoid(K);
      append(f, to_string(shape) + " K=" + std::to_string(K), rabbits::verify_tiling(t).failures);
    }
  }
  const auto report = rabbits::verify_tiling(rabbits::layout_trapezoid(10));
  const double covered = gn_to_float(report.covered_area, 128).to_double();
  if (!(std::fabs(covered - 0.5) < 1e-4)) f.emplace_back("trapezoid K=10 coverage not within 1e-4 of 1/2");
  return f;
}

}  // namespace

std::vector<CriterionResult> verify_all(const VerifyOptions& opts) {
  if (opts.window < 2) throw std::invalid_argument("verify_all: window must be >= 2");
  if (opts.months < 1) throw std::invalid_argument("verify_all: months must be >= 1");
  return {
      {1, "phi power recursion", check_recursion()},
      {2, "series identities", check_series()},
      {3, "pi/4 = arctan(phi^3) - arctan(phi^-1)", check_pi()},
      {4, "divider", check_divider()},
      {5, "AP/EP structure", check_grids(opts.window)},
      {6, "beaded rays", check_rays(opts.window)},
      {7, "subdivision", check_subdivision()},
      {8, "rabbit tilings", check_rabbits(opts.months)},
  };
}

}  // namespace phitile
