#pragma once

// The irrational-ratio Jerusalem square on the unit square: four corner copies
// scaled by k = sqrt2 - 1 and four edge copies scaled by k^2, the edge copies
// centred along each edge and flush against it. 2k + k^2 = 1, so the bands
// [0, k), [k, k + k^2), [k + k^2, 1] tile each axis.

#include <cstddef>
#include <numbers>

#include "pelljeru/jerusalem2d.hpp"
#include "pelljeru/limits.hpp"
#include "pelljeru/pell.hpp"

namespace pelljeru {

struct ExactModel {
  static constexpr double k = std::numbers::sqrt2 - 1.0;
  unsigned depth = 0;  // number of cross removals applied
};

/// A point of the unit square, v downward.
struct UnitPoint {
  double u = 0.0;
  double v = 0.0;
};

/// Membership after `model.depth` removals. Points outside [0, 1]^2 are not contained.
bool exact_contains(const ExactModel& model, UnitPoint p);

/// Samples exact_contains at every cell centre of a resolution x resolution grid.
/// Throws BuildLimitExceeded if resolution > p_{limits.max_build_2d}.
Grid2D rasterize_exact(const ExactModel& model, std::size_t resolution,
                       const BuildLimits& limits = {});

/// Fraction of cells where P_n and the depth n-1 exact raster at resolution p_n
/// disagree. Requires 2 <= n <= limits.max_build_2d.
double discrepancy(PellIndex n, const BuildLimits& limits = {});

}  // namespace pelljeru
