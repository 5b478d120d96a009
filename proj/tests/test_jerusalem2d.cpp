#include <doctest.h>

#include <array>
#include <random>
#include <string>
#include <vector>

#include "pelljeru/errors.hpp"
#include "pelljeru/jerusalem2d.hpp"

using namespace pelljeru;

namespace {

std::size_t side_of(PellIndex n) { return static_cast<std::size_t>(pell(n)); }

Grid2D from_rows(const std::vector<std::string>& rows) {
  Grid2D g(rows.size());
  for (std::size_t y = 0; y < rows.size(); ++y)
    for (std::size_t x = 0; x < rows.size(); ++x)
      if (rows[y][x] == '#') g.set(x, y);
  return g;
}

}  // namespace

TEST_CASE("band_of examples") {
  CHECK(band_of(0, 3) == Band{BandKind::low, 0});
  CHECK(band_of(2, 3) == Band{BandKind::mid, 0});
  CHECK(band_of(4, 3) == Band{BandKind::high, 1});
  CHECK(band_of(1, 2) == Band{BandKind::high, 0});
}

TEST_CASE("band boundaries are 0, p_{n-1}, p_{n-1}+p_{n-2}, p_n") {
  for (PellIndex n = 3; n <= kMaxPellIndex; ++n) {
    const PellValue a = pell(n - 1);
    const PellValue b = pell(n - 2);
    CAPTURE(n);
    CHECK(band_of(a - 1, n).kind == BandKind::low);
    CHECK(band_of(a, n) == Band{BandKind::mid, 0});
    CHECK(band_of(a + b - 1, n) == Band{BandKind::mid, b - 1});
    CHECK(band_of(a + b, n) == Band{BandKind::high, 0});
    CHECK(band_of(pell(n) - 1, n) == Band{BandKind::high, a - 1});
    CHECK(a + b + a == pell(n));
  }
}

TEST_CASE("band_of rejects bad input") {
  CHECK_THROWS_AS(band_of(5, 3), CoordinateOutOfRange);
  CHECK_THROWS_AS(band_of(0, 1), LevelTooSmall);
  CHECK_THROWS_AS(band_of(0, kMaxPellIndex + 1), IndexOutOfRange);
}

TEST_CASE("contains2d examples") {
  CHECK(contains2d(1, 0, 0));
  CHECK_FALSE(contains2d(3, 2, 2));
  CHECK(contains2d(3, 2, 0));
  CHECK_FALSE(contains2d(3, 2, 1));  // arm of the cross above the centre
  CHECK(contains2d(2, 1, 1));
}

TEST_CASE("contains2d errors") {
  CHECK_THROWS_AS(contains2d(0, 0, 0), LevelTooSmall);
  CHECK_THROWS_AS(contains2d(3, 5, 0), CoordinateOutOfRange);
  CHECK_THROWS_AS(contains2d(3, 0, 5), CoordinateOutOfRange);
  CHECK_THROWS_AS(contains2d(kMaxPellIndex + 1, 0, 0), IndexOutOfRange);
}

TEST_CASE("contains2d works at the largest index") {
  const PellIndex n = kMaxPellIndex;
  const PellValue s = pell(n);
  const PellValue a = pell(n - 1);
  CHECK(contains2d(n, 0, 0));
  CHECK(contains2d(n, s - 1, s - 1));
  CHECK_FALSE(contains2d(n, a, a));
  CHECK(contains2d(n, a, 0));       // corner of the top edge block
  CHECK_FALSE(contains2d(n, a, a - 1));  // bottom of the top slot is cross arm
}

TEST_CASE("small builds") {
  const Grid2D one = build2d(1);
  CHECK(one.side() == 1);
  CHECK(one.cell(0, 0));
  CHECK(one.level() == 1);

  const Grid2D two = build2d(2);
  CHECK(two.side() == 2);
  CHECK(two.count() == 4);

  const Grid2D three = build2d(3);
  CHECK(three == from_rows({"#####", "##.##", "#...#", "##.##", "#####"}));
  CHECK(three.count() == 20);
}

TEST_CASE("build2d guards") {
  CHECK_THROWS_AS(build2d(0), LevelTooSmall);
  CHECK_THROWS_AS(build2d(13), BuildLimitExceeded);
  CHECK_THROWS_AS(build2d(4, BuildLimits{3, 8}), BuildLimitExceeded);
  CHECK(build2d(3, BuildLimits{3, 8}).count() == 20);
}

TEST_CASE("dense builder agrees with the classifier for n <= 8") {
  for (PellIndex n = 1; n <= 8; ++n) {
    const Grid2D g = build2d(n);
    const std::size_t s = side_of(n);
    REQUIRE(g.side() == s);
    std::size_t mismatches = 0;
    for (std::size_t y = 0; y < s; ++y)
      for (std::size_t x = 0; x < s; ++x) mismatches += g.cell(x, y) != contains2d(n, x, y);
    CAPTURE(n);
    CHECK(mismatches == 0);
  }
}

TEST_CASE("D4 symmetry for n <= 8") {
  for (PellIndex n = 1; n <= 8; ++n) {
    const Grid2D g = build2d(n);
    CAPTURE(n);
    CHECK(g.flipped_horizontal() == g);
    CHECK(g.flipped_vertical() == g);
    CHECK(g.rotated90() == g);
    CHECK(g.transposed() == g);
  }
}

TEST_CASE("self-similarity of corner and edge blocks") {
  for (PellIndex n = 2; n <= 8; ++n) {
    const Grid2D g = build2d(n);
    const Grid2D prev1 = build2d(n - 1);
    CAPTURE(n);
    for (const Corner c : {Corner::nw, Corner::ne, Corner::sw, Corner::se}) {
      const Grid2D sub = corner_subgrid(g, c);
      CHECK(sub == prev1);
      CHECK(sub.level() == n - 1);
    }
    if (n < 3) continue;
    const Grid2D prev2 = build2d(n - 2);
    const std::size_t a = side_of(n - 1);
    const std::size_t b = side_of(n - 2);
    const std::size_t s = side_of(n);
    CHECK(g.window(a, 0, b) == prev2);
    CHECK(g.window(a, s - b, b) == prev2);
    CHECK(g.window(0, a, b) == prev2);
    CHECK(g.window(s - b, a, b) == prev2);
  }
}

TEST_CASE("corner_subgrid examples and errors") {
  CHECK(corner_subgrid(build2d(3), Corner::nw) == build2d(2));
  CHECK(corner_subgrid(build2d(2), Corner::nw) == build2d(1));
  CHECK(corner_subgrid(build2d(5), Corner::se) == build2d(4));
  CHECK_THROWS_AS(corner_subgrid(build2d(1), Corner::nw), LevelTooSmall);
  CHECK_THROWS_AS(corner_subgrid(Grid2D(5), Corner::nw), LevelTooSmall);
}

TEST_CASE("filled counts follow a_n = 4 a_{n-1} + 4 a_{n-2}") {
  constexpr std::array<std::uint64_t, 8> expected = {1, 4, 20, 96, 464, 2240, 10816, 52224};
  for (PellIndex n = 1; n <= 8; ++n) CHECK(build2d(n).count() == expected[n - 1]);
}

TEST_CASE("uncovered cells are exactly the removed cross") {
  for (PellIndex n = 3; n <= 8; ++n) {
    const Grid2D g = build2d(n);
    const std::size_t a = side_of(n - 1);
    const std::size_t b = side_of(n - 2);
    const std::size_t s = side_of(n);
    Grid2D covered(s);
    Grid2D corner(a);
    Grid2D edge(b);
    for (std::size_t y = 0; y < a; ++y)
      for (std::size_t x = 0; x < a; ++x) corner.set(x, y);
    for (std::size_t y = 0; y < b; ++y)
      for (std::size_t x = 0; x < b; ++x) edge.set(x, y);
    for (const std::size_t x : {std::size_t{0}, a + b})
      for (const std::size_t y : {std::size_t{0}, a + b}) covered.stamp(corner, x, y);
    covered.stamp(edge, a, 0);
    covered.stamp(edge, a, s - b);
    covered.stamp(edge, 0, a);
    covered.stamp(edge, s - b, a);

    std::uint64_t uncovered = 0;
    std::uint64_t filled_outside = 0;
    for (std::size_t y = 0; y < s; ++y)
      for (std::size_t x = 0; x < s; ++x) {
        if (covered.cell(x, y)) continue;
        ++uncovered;
        filled_outside += g.cell(x, y);
      }
    CAPTURE(n);
    CHECK(filled_outside == 0);
    CHECK(uncovered == b * b + 4 * b * (a - b));
  }
}

TEST_CASE("window and stamp at unaligned offsets") {
  std::mt19937_64 rng(7);
  Grid2D big(301);
  for (std::size_t y = 0; y < big.side(); ++y)
    for (std::size_t x = 0; x < big.side(); ++x)
      if (rng() & 1) big.set(x, y);
  std::uniform_int_distribution<std::size_t> pick(0, 200);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t x0 = pick(rng);
    const std::size_t y0 = pick(rng);
    const std::size_t size = 1 + pick(rng) % (big.side() - std::max(x0, y0));
    const Grid2D w = big.window(x0, y0, size);
    bool same = true;
    for (std::size_t y = 0; y < size; ++y)
      for (std::size_t x = 0; x < size; ++x) same &= w.cell(x, y) == big.cell(x0 + x, y0 + y);
    CHECK(same);

    Grid2D canvas(big.side());
    canvas.stamp(w, x0, y0);
    CHECK(canvas.window(x0, y0, size) == w);
    CHECK(canvas.count() == w.count());
  }
  CHECK_THROWS_AS(big.window(300, 0, 2), CoordinateOutOfRange);
  CHECK_THROWS_AS(Grid2D(3).stamp(big, 0, 0), CoordinateOutOfRange);
}

TEST_CASE("count_differing") {
  Grid2D a(70);
  Grid2D b(70);
  a.set(0, 0);
  a.set(69, 69);
  b.set(69, 69);
  b.set(64, 3);
  CHECK(count_differing(a, b) == 2);
  CHECK(count_differing(a, a) == 0);
  CHECK_THROWS_AS(count_differing(a, Grid2D(5)), InvalidArgument);
}
