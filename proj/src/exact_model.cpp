#include "pelljeru/exact_model.hpp"

#include <algorithm>
#include <string>

#include "parallel.hpp"
#include "pelljeru/errors.hpp"

namespace pelljeru {
namespace {

enum class Side { low, mid, high };

struct Split {
  Side side;
  double offset;
};

constexpr double kRatio = ExactModel::k;
constexpr double kRatio2 = kRatio * kRatio;
constexpr double kHighStart = kRatio + kRatio2;

Split split(double t) {
  if (t < kRatio) return {Side::low, t};
  if (t < kHighStart) return {Side::mid, t - kRatio};
  return {Side::high, t - kHighStart};
}

}  // namespace

bool exact_contains(const ExactModel& model, UnitPoint p) {
  if (!(p.u >= 0.0 && p.u <= 1.0 && p.v >= 0.0 && p.v <= 1.0)) return false;
  double u = p.u;
  double v = p.v;
  for (unsigned d = model.depth; d > 0; --d) {
    const Split su = split(u);
    const Split sv = split(v);
    const bool mu = su.side == Side::mid;
    const bool mv = sv.side == Side::mid;
    if (mu && mv) return false;
    if (mu || mv) {
      // The k^2 edge square hugs the outer boundary of its k^2 x k slot.
      const Split& across = mu ? sv : su;
      double off = across.offset;
      if (across.side == Side::low) {
        if (off >= kRatio2) return false;
      } else {
        off -= kRatio - kRatio2;
        if (off < 0.0) return false;
      }
      u = (mu ? su.offset : off) / kRatio2;
      v = (mv ? sv.offset : off) / kRatio2;
    } else {
      u = su.offset / kRatio;
      v = sv.offset / kRatio;
    }
  }
  return true;
}

Grid2D rasterize_exact(const ExactModel& model, std::size_t resolution, const BuildLimits& limits) {
  if (resolution == 0) throw InvalidArgument("raster resolution must be at least 1");
  const auto cap = pell(std::min(limits.max_build_2d, kMaxPellIndex));
  if (resolution > cap) {
    throw BuildLimitExceeded("resolution " + std::to_string(resolution) + " exceeds " +
                             to_string(cap) + " (p_" + std::to_string(limits.max_build_2d) + ")");
  }
  Grid2D out(resolution);
  const double res = static_cast<double>(resolution);
  detail::parallel_for(resolution, 256, [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      const double v = (static_cast<double>(j) + 0.5) / res;
      for (std::size_t i = 0; i < resolution; ++i) {
        if (exact_contains(model, {(static_cast<double>(i) + 0.5) / res, v})) out.set(i, j);
      }
    }
  });
  return out;
}

double discrepancy(PellIndex n, const BuildLimits& limits) {
  if (n < 2) throw LevelTooSmall("discrepancy needs n >= 2, got n = " + std::to_string(n));
  const Grid2D pell_grid = build2d(n, limits);
  const Grid2D exact = rasterize_exact(ExactModel{n - 1}, pell_grid.side(), limits);
  const double cells = static_cast<double>(pell_grid.side()) * static_cast<double>(pell_grid.side());
  return static_cast<double>(count_differing(pell_grid, exact)) / cells;
}

}  // namespace pelljeru
