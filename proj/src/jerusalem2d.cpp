#include "pelljeru/jerusalem2d.hpp"

#include <bit>
#include <string>

#include "parallel.hpp"
#include "pelljeru/errors.hpp"

namespace pelljeru {
namespace {

struct Placement {
  const Grid2D* block;
  std::size_t x0;
  std::size_t y0;
};

// Band split at level n >= 2 for a coordinate already known to be in range.
Band classify(PellValue coord, PellValue low_width, PellValue mid_width) {
  if (coord < low_width) return {BandKind::low, coord};
  if (coord < low_width + mid_width) return {BandKind::mid, coord - low_width};
  return {BandKind::high, coord - low_width - mid_width};
}

// Maps a non-mid band offset into the flush p_{n-2} edge block, or nothing when
// the offset lies in the removed remainder of the slot.
std::optional<PellValue> into_edge_block(const Band& band, PellValue low_width,
                                         PellValue mid_width) {
  if (band.kind == BandKind::low) {
    if (band.local_offset >= mid_width) return std::nullopt;
    return band.local_offset;
  }
  const PellValue gap = low_width - mid_width;
  if (band.local_offset < gap) return std::nullopt;
  return band.local_offset - gap;
}

std::string describe(PellValue v) { return to_string(v); }

// Composes level n from the two previous levels, one output row per task.
Grid2D compose(PellIndex n, const Grid2D& prev1, const Grid2D& prev2) {
  const std::size_t a = prev1.side();
  const std::size_t b = prev2.side();
  const std::size_t s = 2 * a + b;
  std::vector<Placement> placements = {
      {&prev1, 0, 0}, {&prev1, a + b, 0}, {&prev1, 0, a + b}, {&prev1, a + b, a + b}};
  if (b != 0) {
    placements.insert(placements.end(),
                      {{&prev2, a, 0}, {&prev2, a, s - b}, {&prev2, 0, a}, {&prev2, s - b, a}});
  }
  Grid2D out(s, n);
  detail::parallel_for(s, 512, [&](std::size_t begin, std::size_t end) {
    for (std::size_t y = begin; y < end; ++y) {
      auto dst = out.row(y);
      for (const auto& p : placements) {
        const std::size_t bs = p.block->side();
        if (y < p.y0 || y >= p.y0 + bs) continue;
        detail::or_bits(dst, p.x0, p.block->row(y - p.y0), bs);
      }
    }
  });
  return out;
}

}  // namespace

Band band_of(PellValue coord, PellIndex n) {
  if (n < 2) throw LevelTooSmall("bands exist only for n >= 2, got n = " + std::to_string(n));
  const PellValue side = pell(n);
  if (coord >= side) {
    throw CoordinateOutOfRange(describe(coord) + " not below p_" + std::to_string(n) + " = " +
                               describe(side));
  }
  return classify(coord, pell(n - 1), pell(n - 2));
}

bool contains2d(PellIndex n, PellValue x, PellValue y) {
  if (n == 0) throw LevelTooSmall("P_0 has no cells");
  const PellValue side = pell(n);
  if (x >= side || y >= side) {
    throw CoordinateOutOfRange("(" + describe(x) + ", " + describe(y) + ") outside P_" +
                               std::to_string(n) + " of side " + describe(side));
  }
  while (n >= 2) {
    const PellValue a = pell(n - 1);
    const PellValue b = pell(n - 2);
    const Band bx = classify(x, a, b);
    const Band by = classify(y, a, b);
    const bool mx = bx.kind == BandKind::mid;
    const bool my = by.kind == BandKind::mid;
    if (mx && my) return false;
    if (mx || my) {
      const auto other = into_edge_block(mx ? by : bx, a, b);
      if (!other) return false;
      x = mx ? bx.local_offset : *other;
      y = my ? by.local_offset : *other;
      n -= 2;
    } else {
      x = bx.local_offset;
      y = by.local_offset;
      n -= 1;
    }
  }
  // Mid bands are empty at n = 2, so the walk never lands on P_0.
  return n == 1;
}

Grid2D::Grid2D(std::size_t side, std::optional<PellIndex> level)
    : side_(side),
      stride_(detail::words_for(side)),
      level_(level),
      bits_(side * stride_, 0) {}

void Grid2D::stamp(const Grid2D& block, std::size_t x0, std::size_t y0) {
  if (x0 + block.side_ > side_ || y0 + block.side_ > side_) {
    throw CoordinateOutOfRange("block of side " + std::to_string(block.side_) + " at (" +
                               std::to_string(x0) + ", " + std::to_string(y0) +
                               ") exceeds grid of side " + std::to_string(side_));
  }
  for (std::size_t y = 0; y < block.side_; ++y) {
    detail::or_bits(row(y0 + y), x0, block.row(y), block.side_);
  }
}

Grid2D Grid2D::window(std::size_t x0, std::size_t y0, std::size_t size,
                      std::optional<PellIndex> level) const {
  if (x0 + size > side_ || y0 + size > side_) {
    throw CoordinateOutOfRange("window of side " + std::to_string(size) + " at (" +
                               std::to_string(x0) + ", " + std::to_string(y0) +
                               ") exceeds grid of side " + std::to_string(side_));
  }
  Grid2D out(size, level);
  for (std::size_t y = 0; y < size; ++y) detail::extract_bits(out.row(y), row(y0 + y), x0, size);
  return out;
}

std::uint64_t Grid2D::count() const {
  std::uint64_t total = 0;
  for (const auto w : bits_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

Grid2D Grid2D::flipped_horizontal() const {
  Grid2D out(side_, level_);
  for (std::size_t y = 0; y < side_; ++y)
    for (std::size_t x = 0; x < side_; ++x)
      if (cell(x, y)) out.set(side_ - 1 - x, y);
  return out;
}

Grid2D Grid2D::flipped_vertical() const {
  Grid2D out(side_, level_);
  for (std::size_t y = 0; y < side_; ++y) {
    const auto src = row(y);
    std::copy(src.begin(), src.end(), out.row(side_ - 1 - y).begin());
  }
  return out;
}

Grid2D Grid2D::transposed() const {
  Grid2D out(side_, level_);
  for (std::size_t y = 0; y < side_; ++y)
    for (std::size_t x = 0; x < side_; ++x)
      if (cell(x, y)) out.set(y, x);
  return out;
}

Grid2D Grid2D::rotated90() const {
  // Clockwise: (x, y) -> (side - 1 - y, x).
  Grid2D out(side_, level_);
  for (std::size_t y = 0; y < side_; ++y)
    for (std::size_t x = 0; x < side_; ++x)
      if (cell(x, y)) out.set(side_ - 1 - y, x);
  return out;
}

Grid2D build2d(PellIndex n, const BuildLimits& limits) {
  if (n == 0) throw LevelTooSmall("P_0 has zero extent and cannot be built");
  if (n > limits.max_build_2d) {
    throw BuildLimitExceeded("n = " + std::to_string(n) + " exceeds the 2D build limit " +
                             std::to_string(limits.max_build_2d));
  }
  if (n > kMaxPellIndex || pell(n) > (PellValue{1} << 20)) {
    throw BuildLimitExceeded("P_" + std::to_string(n) + " is too large for a dense grid");
  }
  Grid2D prev2(0, 0);
  Grid2D prev1(1, 1);
  prev1.set(0, 0);
  for (PellIndex level = 2; level <= n; ++level) {
    Grid2D cur = compose(level, prev1, prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

Grid2D corner_subgrid(const Grid2D& grid, Corner corner) {
  const auto level = grid.level();
  if (!level || *level < 2) throw LevelTooSmall("corner blocks need a grid built at n >= 2");
  const auto sub = static_cast<std::size_t>(pell(*level - 1));
  const std::size_t far = grid.side() - sub;
  const std::size_t x0 = (corner == Corner::ne || corner == Corner::se) ? far : 0;
  const std::size_t y0 = (corner == Corner::sw || corner == Corner::se) ? far : 0;
  return grid.window(x0, y0, sub, *level - 1);
}

std::uint64_t count_differing(const Grid2D& a, const Grid2D& b) {
  if (a.side() != b.side()) {
    throw InvalidArgument("grids of side " + std::to_string(a.side()) + " and " +
                          std::to_string(b.side()) + " cannot be compared");
  }
  std::uint64_t total = 0;
  for (std::size_t y = 0; y < a.side(); ++y) {
    const auto ra = a.row(y);
    const auto rb = b.row(y);
    for (std::size_t i = 0; i < ra.size(); ++i)
      total += static_cast<std::uint64_t>(std::popcount(ra[i] ^ rb[i]));
  }
  return total;
}

}  // namespace pelljeru
