#pragma once

// The integer Jerusalem square P_n of side p_n:
//
//   P_n = | P_{n-1} P_{n-2} P_{n-1} |
//         | P_{n-2}    .    P_{n-2} |
//         | P_{n-1} P_{n-2} P_{n-1} |
//
// with P_0 empty and P_1 a single cell. Each P_{n-2} sits in a slot that is
// p_{n-1} deep, flush against the outer boundary; the rest of the slot and the
// centre block form the removed cross.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pelljeru/detail/bits.hpp"
#include "pelljeru/limits.hpp"
#include "pelljeru/pell.hpp"

namespace pelljeru {

enum class BandKind { low, mid, high };

/// Position of one coordinate within the p_{n-1} | p_{n-2} | p_{n-1} split of level n.
struct Band {
  BandKind kind = BandKind::low;
  PellValue local_offset = 0;

  friend bool operator==(const Band&, const Band&) = default;
};

/// Throws LevelTooSmall for n < 2, CoordinateOutOfRange for coord >= p_n.
Band band_of(PellValue coord, PellIndex n);

/// Membership of cell (x, y) in P_n without building anything. Valid for
/// 1 <= n <= kMaxPellIndex.
bool contains2d(PellIndex n, PellValue x, PellValue y);

/// Dense bit-packed square occupancy grid; x rightward, y downward, origin top-left.
/// Bit x of a row lives in word x / 64 at position x % 64. Padding bits are zero.
class Grid2D {
 public:
  explicit Grid2D(std::size_t side, std::optional<PellIndex> level = std::nullopt);

  std::size_t side() const { return side_; }
  /// The Pell level this grid was built at, if it came from build2d.
  std::optional<PellIndex> level() const { return level_; }

  bool cell(std::size_t x, std::size_t y) const { return detail::test_bit(row(y), x); }
  void set(std::size_t x, std::size_t y) { detail::set_bit(row(y), x); }

  std::span<const detail::Word> row(std::size_t y) const {
    return {bits_.data() + y * stride_, stride_};
  }
  std::span<detail::Word> row(std::size_t y) { return {bits_.data() + y * stride_, stride_}; }

  /// ORs `block` into this grid with its top-left corner at (x0, y0).
  void stamp(const Grid2D& block, std::size_t x0, std::size_t y0);

  /// Copy of the size x size window at (x0, y0), tagged with `level`.
  Grid2D window(std::size_t x0, std::size_t y0, std::size_t size,
                std::optional<PellIndex> level = std::nullopt) const;

  std::uint64_t count() const;

  Grid2D flipped_horizontal() const;
  Grid2D flipped_vertical() const;
  Grid2D transposed() const;
  Grid2D rotated90() const;

  /// Cell-for-cell comparison; the level tag is ignored.
  friend bool operator==(const Grid2D& a, const Grid2D& b) {
    return a.side_ == b.side_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t side_;
  std::size_t stride_;
  std::optional<PellIndex> level_;
  std::vector<detail::Word> bits_;
};

/// Builds P_n by stamping the nine blocks of each level, keeping only the two
/// previous levels alive. Throws BuildLimitExceeded above limits.max_build_2d.
Grid2D build2d(PellIndex n, const BuildLimits& limits = {});

enum class Corner { nw, ne, sw, se };

/// The p_{n-1} corner block of a grid built at level n >= 2; tagged level n-1.
Grid2D corner_subgrid(const Grid2D& grid, Corner corner);

/// Number of cells on which two equally sized grids differ.
std::uint64_t count_differing(const Grid2D& a, const Grid2D& b);

}  // namespace pelljeru
