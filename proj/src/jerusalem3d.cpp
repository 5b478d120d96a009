#include "pelljeru/jerusalem3d.hpp"

#include <array>
#include <bit>
#include <string>

#include "parallel.hpp"
#include "pelljeru/errors.hpp"

namespace pelljeru {
namespace {

struct Placement {
  const Grid3D* block;
  std::size_t x0;
  std::size_t y0;
  std::size_t z0;
};

Grid3D compose(PellIndex n, const Grid3D& prev1, const Grid3D& prev2) {
  const std::size_t a = prev1.side();
  const std::size_t b = prev2.side();
  const std::size_t s = 2 * a + b;
  std::vector<Placement> placements;
  for (const std::size_t z : {std::size_t{0}, a + b})
    for (const std::size_t y : {std::size_t{0}, a + b})
      for (const std::size_t x : {std::size_t{0}, a + b}) placements.push_back({&prev1, x, y, z});
  if (b != 0) {
    const std::array<std::size_t, 2> flush = {0, s - b};
    for (const std::size_t p : flush)
      for (const std::size_t q : flush) {
        placements.push_back({&prev2, a, p, q});
        placements.push_back({&prev2, p, a, q});
        placements.push_back({&prev2, p, q, a});
      }
  }
  Grid3D out(s, n);
  detail::parallel_for(s * s, 4096, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      const std::size_t y = r % s;
      const std::size_t z = r / s;
      auto dst = out.row(y, z);
      for (const auto& p : placements) {
        const std::size_t bs = p.block->side();
        if (y < p.y0 || y >= p.y0 + bs || z < p.z0 || z >= p.z0 + bs) continue;
        detail::or_bits(dst, p.x0, p.block->row(y - p.y0, z - p.z0), bs);
      }
    }
  });
  return out;
}

std::string describe(std::size_t x, std::size_t y, std::size_t z) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) + ")";
}

}  // namespace

bool contains3d(PellIndex n, PellValue x, PellValue y, PellValue z) {
  if (n == 0) throw LevelTooSmall("the level-0 cube has no voxels");
  const PellValue side = pell(n);
  if (x >= side || y >= side || z >= side) {
    throw CoordinateOutOfRange("(" + to_string(x) + ", " + to_string(y) + ", " + to_string(z) +
                               ") outside level " + std::to_string(n) + " cube of side " +
                               to_string(side));
  }
  std::array<PellValue, 3> c = {x, y, z};
  while (n >= 2) {
    const PellValue a = pell(n - 1);
    const PellValue b = pell(n - 2);
    std::array<Band, 3> bands{};
    int mids = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      bands[i] = band_of(c[i], n);
      if (bands[i].kind == BandKind::mid) ++mids;
    }
    if (mids >= 2) return false;
    for (std::size_t i = 0; i < 3; ++i) {
      PellValue off = bands[i].local_offset;
      if (mids == 1) {
        // Non-mid axes must fall inside the flush edge block.
        if (bands[i].kind == BandKind::low && off >= b) return false;
        if (bands[i].kind == BandKind::high) {
          if (off < a - b) return false;
          off -= a - b;
        }
      }
      c[i] = off;
    }
    n -= mids == 1 ? 2 : 1;
  }
  return n == 1;
}

Grid3D::Grid3D(std::size_t side, std::optional<PellIndex> level)
    : side_(side),
      stride_(detail::words_for(side)),
      level_(level),
      bits_(side * side * stride_, 0) {}

void Grid3D::stamp(const Grid3D& block, std::size_t x0, std::size_t y0, std::size_t z0) {
  const std::size_t bs = block.side_;
  if (x0 + bs > side_ || y0 + bs > side_ || z0 + bs > side_) {
    throw CoordinateOutOfRange("block of side " + std::to_string(bs) + " at " +
                               describe(x0, y0, z0) + " exceeds grid of side " +
                               std::to_string(side_));
  }
  for (std::size_t z = 0; z < bs; ++z)
    for (std::size_t y = 0; y < bs; ++y)
      detail::or_bits(row(y0 + y, z0 + z), x0, block.row(y, z), bs);
}

Grid3D Grid3D::window(std::size_t x0, std::size_t y0, std::size_t z0, std::size_t size) const {
  if (x0 + size > side_ || y0 + size > side_ || z0 + size > side_) {
    throw CoordinateOutOfRange("window of side " + std::to_string(size) + " at " +
                               describe(x0, y0, z0) + " exceeds grid of side " +
                               std::to_string(side_));
  }
  Grid3D out(size);
  for (std::size_t z = 0; z < size; ++z)
    for (std::size_t y = 0; y < size; ++y)
      detail::extract_bits(out.row(y, z), row(y0 + y, z0 + z), x0, size);
  return out;
}

std::uint64_t Grid3D::count() const {
  std::uint64_t total = 0;
  for (const auto w : bits_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

Grid2D Grid3D::slice_z(std::size_t z) const {
  if (z >= side_) {
    throw CoordinateOutOfRange("slice z = " + std::to_string(z) + " outside grid of side " +
                               std::to_string(side_));
  }
  Grid2D out(side_, level_);
  for (std::size_t y = 0; y < side_; ++y) {
    const auto src = row(y, z);
    std::copy(src.begin(), src.end(), out.row(y).begin());
  }
  return out;
}

Grid3D build3d(PellIndex n, const BuildLimits& limits) {
  if (n == 0) throw LevelTooSmall("the level-0 cube has zero extent and cannot be built");
  if (n > limits.max_build_3d) {
    throw BuildLimitExceeded("n = " + std::to_string(n) + " exceeds the 3D build limit " +
                             std::to_string(limits.max_build_3d));
  }
  if (n > kMaxPellIndex || pell(n) > (PellValue{1} << 13)) {
    throw BuildLimitExceeded("level " + std::to_string(n) + " cube is too large for a dense grid");
  }
  Grid3D prev2(0, 0);
  Grid3D prev1(1, 1);
  prev1.set(0, 0, 0);
  for (PellIndex level = 2; level <= n; ++level) {
    Grid3D cur = compose(level, prev1, prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

}  // namespace pelljeru
