#pragma once

// The integer Jerusalem cube on a p_n^3 voxel grid. Each axis is split into the
// same low | mid | high bands as the square. The 8 corner cells of the 3x3x3
// arrangement hold level n-1, the 12 edge cells hold level n-2 flush against
// the outer boundary, and the 6 face centres plus the body centre are removed.
// Equivalently: a voxel is removed at a level iff two or more axes are mid.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pelljeru/detail/bits.hpp"
#include "pelljeru/jerusalem2d.hpp"
#include "pelljeru/limits.hpp"
#include "pelljeru/pell.hpp"

namespace pelljeru {

bool contains3d(PellIndex n, PellValue x, PellValue y, PellValue z);

/// Dense bit-packed voxel grid. Rows run along x; row (y, z) starts at word
/// (z * side + y) * stride, so iteration order is x fastest, then y, then z.
class Grid3D {
 public:
  explicit Grid3D(std::size_t side, std::optional<PellIndex> level = std::nullopt);

  std::size_t side() const { return side_; }
  std::optional<PellIndex> level() const { return level_; }

  bool voxel(std::size_t x, std::size_t y, std::size_t z) const {
    return detail::test_bit(row(y, z), x);
  }
  void set(std::size_t x, std::size_t y, std::size_t z) { detail::set_bit(row(y, z), x); }

  std::span<const detail::Word> row(std::size_t y, std::size_t z) const {
    return {bits_.data() + (z * side_ + y) * stride_, stride_};
  }
  std::span<detail::Word> row(std::size_t y, std::size_t z) {
    return {bits_.data() + (z * side_ + y) * stride_, stride_};
  }

  void stamp(const Grid3D& block, std::size_t x0, std::size_t y0, std::size_t z0);
  Grid3D window(std::size_t x0, std::size_t y0, std::size_t z0, std::size_t size) const;

  std::uint64_t count() const;

  /// The plane z = const as a square grid with the same (x, y) convention.
  Grid2D slice_z(std::size_t z) const;

  friend bool operator==(const Grid3D& a, const Grid3D& b) {
    return a.side_ == b.side_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t side_;
  std::size_t stride_;
  std::optional<PellIndex> level_;
  std::vector<detail::Word> bits_;
};

/// Stamps 8 corner and 12 edge blocks per level. Throws BuildLimitExceeded above
/// limits.max_build_3d.
Grid3D build3d(PellIndex n, const BuildLimits& limits = {});

}  // namespace pelljeru
