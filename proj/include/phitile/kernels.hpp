#pragma once

// Data-parallel kernels over tile collections. Every kernel has a serial
// twin in phitile::serial with identical output; tests and the benchmark
// compare the two.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "phitile/geometry.hpp"

namespace phitile {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// All (i, j), i < j, whose open interiors intersect, sorted.
std::vector<IndexPair> overlapping_pairs(std::span<const GoldenRect> rects);

/// Exact sum of areas.
GoldenNumber total_area(std::span<const GoldenRect> rects);

/// Cells of the grid formed by consecutive entries of xs and ys, tagged with
/// the given exponents. Output is x-major, i.e. already canonical when xs
/// and ys are ascending.
std::vector<GoldenRect> grid_cells(std::span<const GoldenNumber> xs, std::span<const int> width_exps,
                                   std::span<const GoldenNumber> ys, std::span<const int> height_exps);

/// Stable canonical sort.
void sort_canonical(std::vector<GoldenRect>& rects);

/// Number of worker threads the parallel kernels will use.
int worker_threads();

namespace serial {

std::vector<IndexPair> overlapping_pairs(std::span<const GoldenRect> rects);
GoldenNumber total_area(std::span<const GoldenRect> rects);
std::vector<GoldenRect> grid_cells(std::span<const GoldenNumber> xs, std::span<const int> width_exps,
                                   std::span<const GoldenNumber> ys, std::span<const int> height_exps);

}  // namespace serial

}  // namespace phitile
