#include "phitile/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace phitile {

namespace {

void check_grid_args(std::span<const GoldenNumber> xs, std::span<const int> wexps,
                     std::span<const GoldenNumber> ys, std::span<const int> hexps) {
  if (xs.size() < 2 || ys.size() < 2 || wexps.size() + 1 != xs.size() ||
      hexps.size() + 1 != ys.size()) {
    throw std::invalid_argument("grid_cells: need >= 2 lines per axis and one exponent per gap");
  }
}

GoldenRect make_cell(std::span<const GoldenNumber> xs, std::span<const int> wexps,
                     std::span<const GoldenNumber> ys, std::span<const int> hexps, std::size_t ix,
                     std::size_t iy) {
  return {{xs[ix], ys[iy]}, {xs[ix + 1], ys[iy + 1]}, wexps[ix], hexps[iy]};
}

}  // namespace

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<IndexPair> overlapping_pairs(std::span<const GoldenRect> rects) {
  const auto n = static_cast<std::int64_t>(rects.size());
  std::vector<std::vector<IndexPair>> per_thread(static_cast<std::size_t>(worker_threads()));
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
#ifdef _OPENMP
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#else
    auto& local = per_thread[0];
#endif
    for (std::int64_t j = i + 1; j < n; ++j) {
      if (interiors_overlap(rects[static_cast<std::size_t>(i)], rects[static_cast<std::size_t>(j)])) {
        local.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
  }
  std::vector<IndexPair> out;
  for (auto& v : per_thread) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

GoldenNumber total_area(std::span<const GoldenRect> rects) {
  const auto n = static_cast<std::int64_t>(rects.size());
  std::vector<GoldenNumber> partial(static_cast<std::size_t>(worker_threads()));
#pragma omp parallel
  {
#ifdef _OPENMP
    auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
    auto& acc = partial[0];
#endif
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) acc += rects[static_cast<std::size_t>(i)].area();
  }
  GoldenNumber sum;
  for (const auto& p : partial) sum += p;
  return sum;
}

std::vector<GoldenRect> grid_cells(std::span<const GoldenNumber> xs, std::span<const int> wexps,
                                   std::span<const GoldenNumber> ys, std::span<const int> hexps) {
  check_grid_args(xs, wexps, ys, hexps);
  const std::size_t nx = wexps.size();
  const std::size_t ny = hexps.size();
  std::vector<GoldenRect> out(nx * ny);
  const auto total = static_cast<std::int64_t>(nx * ny);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < total; ++c) {
    const auto cell = static_cast<std::size_t>(c);
    out[cell] = make_cell(xs, wexps, ys, hexps, cell / ny, cell % ny);
  }
  return out;
}

void sort_canonical(std::vector<GoldenRect>& rects) {
  std::stable_sort(rects.begin(), rects.end(), canonical_less);
}

namespace serial {

std::vector<IndexPair> overlapping_pairs(std::span<const GoldenRect> rects) {
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < rects.size(); ++i) {
    for (std::size_t j = i + 1; j < rects.size(); ++j) {
      if (interiors_overlap(rects[i], rects[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

GoldenNumber total_area(std::span<const GoldenRect> rects) {
  GoldenNumber sum;
  for (const auto& r : rects) sum += r.area();
  return sum;
}

std::vector<GoldenRect> grid_cells(std::span<const GoldenNumber> xs, std::span<const int> wexps,
                                   std::span<const GoldenNumber> ys, std::span<const int> hexps) {
  check_grid_args(xs, wexps, ys, hexps);
  std::vector<GoldenRect> out;
  for (std::size_t iy = 0; iy < hexps.size(); ++iy) {
    for (std::size_t ix = 0; ix < wexps.size(); ++ix) {
      out.push_back(make_cell(xs, wexps, ys, hexps, ix, iy));
    }
  }
  sort_canonical(out);
  return out;
}

}  // namespace serial

}  // namespace phitile
