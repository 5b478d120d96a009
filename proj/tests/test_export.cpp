#include <doctest.h>

#include <fstream>
#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <random>
#include <sstream>
#include <string>

#include "pelljeru/errors.hpp"
#include "pelljeru/export.hpp"
#include "pelljeru/metrics.hpp"

using namespace pelljeru;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) {
  return read_file(std::string(PELLJERU_GOLDEN_DIR) + "/" + name);
}

std::string render(const Grid2D& g, Format2D f) {
  std::ostringstream os;
  const auto bytes = write2d(g, f, os);
  CHECK(bytes == os.str().size());
  return os.str();
}

std::string render(const Grid3D& g, Format3D f) {
  std::ostringstream os;
  const auto bytes = write3d(g, f, os);
  CHECK(bytes == os.str().size());
  return os.str();
}

struct EdgeKey {
  std::uint32_t a, b;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

}  // namespace

TEST_CASE("golden 2D exports") {
  for (PellIndex n = 1; n <= 4; ++n) {
    const Grid2D g = build2d(n);
    CAPTURE(n);
    CHECK(render(g, Format2D::pbm_ascii) == golden("square_" + std::to_string(n) + ".pbm"));
    CHECK(render(g, Format2D::csv) == golden("square_" + std::to_string(n) + ".csv"));
  }
}

TEST_CASE("golden 3D exports") {
  for (PellIndex n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(render(build3d(n), Format3D::xyz_text) == golden("cube_" + std::to_string(n) + ".xyz"));
  }
}

TEST_CASE("2D export examples") {
  CHECK(render(build2d(1), Format2D::pbm_ascii) == "P1\n1 1\n1\n");
  CHECK(render(build2d(2), Format2D::pbm_ascii) == "P1\n2 2\n1 1\n1 1\n");
  const std::string csv = render(build2d(3), Format2D::csv);
  std::istringstream rows(csv);
  std::string row0, row1, row2;
  std::getline(rows, row0);
  std::getline(rows, row1);
  std::getline(rows, row2);
  CHECK(row0 == "1,1,1,1,1");
  CHECK(row2 == "1,0,0,0,1");
}

TEST_CASE("binary PBM packs rows MSB first") {
  const std::string expected = std::string("P4\n5 5\n") + "\xF8\xD8\x88\xD8\xF8";
  CHECK(render(build2d(3), Format2D::pbm_binary) == expected);

  const Grid2D g = build2d(6);
  const std::string bytes = render(g, Format2D::pbm_binary);
  const std::string head = "P4\n70 70\n";
  REQUIRE(bytes.compare(0, head.size(), head) == 0);
  const std::size_t stride = 9;
  REQUIRE(bytes.size() == head.size() + stride * 70);
  bool same = true;
  for (std::size_t y = 0; y < 70; ++y)
    for (std::size_t x = 0; x < 70; ++x) {
      const auto byte = static_cast<unsigned char>(bytes[head.size() + y * stride + x / 8]);
      same &= ((byte >> (7 - x % 8)) & 1u) == static_cast<unsigned>(g.cell(x, y));
    }
  CHECK(same);
}

TEST_CASE("SVG has one rect per filled cell") {
  CHECK(render(build2d(2), Format2D::svg) ==
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 2 2\">\n"
        "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"black\"/>\n"
        "<rect x=\"1\" y=\"0\" width=\"1\" height=\"1\" fill=\"black\"/>\n"
        "<rect x=\"0\" y=\"1\" width=\"1\" height=\"1\" fill=\"black\"/>\n"
        "<rect x=\"1\" y=\"1\" width=\"1\" height=\"1\" fill=\"black\"/>\n"
        "</svg>\n");
  const std::string svg = render(build2d(5), Format2D::svg);
  std::size_t rects = 0;
  for (auto pos = svg.find("<rect"); pos != std::string::npos; pos = svg.find("<rect", pos + 1)) ++rects;
  CHECK(rects == 464);
  CHECK(svg.find("viewBox=\"0 0 29 29\"") != std::string::npos);
}

TEST_CASE("text formats round-trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t side = 1 + rng() % 90;
    Grid2D g(side);
    for (std::size_t y = 0; y < side; ++y)
      for (std::size_t x = 0; x < side; ++x)
        if (rng() % 3 == 0) g.set(x, y);
    std::istringstream pbm(render(g, Format2D::pbm_ascii));
    CHECK(read_pbm_ascii(pbm) == g);
    std::istringstream csv(render(g, Format2D::csv));
    CHECK(read_csv(csv) == g);
  }
  for (PellIndex n = 1; n <= 7; ++n) {
    std::istringstream pbm(render(build2d(n), Format2D::pbm_ascii));
    CHECK(read_pbm_ascii(pbm) == build2d(n));
  }
}

TEST_CASE("readers reject malformed input") {
  std::istringstream no_magic("P2\n1 1\n1\n");
  CHECK_THROWS_AS(read_pbm_ascii(no_magic), InvalidArgument);
  std::istringstream truncated("P1\n2 2\n1 1\n1\n");
  CHECK_THROWS_AS(read_pbm_ascii(truncated), InvalidArgument);
  std::istringstream not_square("P1\n2 1\n1 1\n");
  CHECK_THROWS_AS(read_pbm_ascii(not_square), InvalidArgument);
  std::istringstream ragged("1,1\n1\n");
  CHECK_THROWS_AS(read_csv(ragged), InvalidArgument);
  std::istringstream bad_digit("1,2\n1,1\n");
  CHECK_THROWS_AS(read_csv(bad_digit), InvalidArgument);
}

TEST_CASE("exports are deterministic") {
  const Grid2D g = build2d(6);
  for (const auto f : {Format2D::pbm_ascii, Format2D::pbm_binary, Format2D::svg, Format2D::csv})
    CHECK(render(g, f) == render(build2d(6), f));
  CHECK(render(build3d(4), Format3D::obj_mesh) == render(build3d(4), Format3D::obj_mesh));
}

TEST_CASE("xyz lists filled voxels in (z, y, x) order") {
  CHECK(render(build3d(1), Format3D::xyz_text) == "0 0 0\n");
  const std::string two = render(build3d(2), Format3D::xyz_text);
  CHECK(two == "0 0 0\n1 0 0\n0 1 0\n1 1 0\n0 0 1\n1 0 1\n0 1 1\n1 1 1\n");
  for (PellIndex n = 1; n <= 5; ++n) {
    const std::string text = render(build3d(n), Format3D::xyz_text);
    const auto lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
    CHECK(Count(lines) == count3d_recurrence(n));
  }
}

TEST_CASE("solid 2x2x2 block mesh") {
  const SurfaceMesh m = surface_mesh(build3d(2));
  CHECK(m.vertices.size() == 26);
  CHECK(m.triangles.size() == 48);  // 24 unit quads
  std::set<EdgeKey> edges;
  for (const auto& t : m.triangles)
    for (int i = 0; i < 3; ++i) edges.insert({std::min(t[i], t[(i + 1) % 3]), std::max(t[i], t[(i + 1) % 3])});
  const long euler = static_cast<long>(m.vertices.size()) - static_cast<long>(edges.size()) +
                     static_cast<long>(m.triangles.size());
  CHECK(euler == 2);

  const std::string obj = render(build3d(2), Format3D::obj_mesh);
  CHECK(obj.rfind("v 0 0 0\nv 1 0 0\nv 2 0 0\n", 0) == 0);
  CHECK(std::count(obj.begin(), obj.end(), 'f') == 48);
  CHECK(obj.find("f 1 ") != std::string::npos);
}

TEST_CASE("cube meshes are closed and outward oriented") {
  for (PellIndex n = 1; n <= 5; ++n) {
    const Grid3D g = build3d(n);
    const SurfaceMesh m = surface_mesh(g);
    CAPTURE(n);

    std::map<EdgeKey, int> undirected;
    std::map<EdgeKey, int> directed;
    for (const auto& t : m.triangles)
      for (int i = 0; i < 3; ++i) {
        const auto a = t[i];
        const auto b = t[(i + 1) % 3];
        ++undirected[{std::min(a, b), std::max(a, b)}];
        ++directed[{a, b}];
      }
    bool closed = true;
    for (const auto& [e, uses] : undirected) closed &= uses == 2;
    bool consistent = true;
    for (const auto& [e, uses] : directed) consistent &= uses == 1;
    CHECK(closed);
    CHECK(consistent);

    // Divergence theorem: an outward-oriented closed surface encloses the voxel count.
    long long six_volume = 0;
    for (const auto& t : m.triangles) {
      const auto& p = m.vertices[t[0]];
      const auto& q = m.vertices[t[1]];
      const auto& r = m.vertices[t[2]];
      const long long px = p[0], py = p[1], pz = p[2];
      const long long qx = q[0], qy = q[1], qz = q[2];
      const long long rx = r[0], ry = r[1], rz = r[2];
      six_volume += px * (qy * rz - qz * ry) - py * (qx * rz - qz * rx) + pz * (qx * ry - qy * rx);
    }
    CHECK(six_volume == 6 * static_cast<long long>(g.count()));

    bool sorted = true;
    for (std::size_t i = 1; i < m.vertices.size(); ++i) {
      const auto& a = m.vertices[i - 1];
      const auto& b = m.vertices[i];
      sorted &= std::tuple(a[2], a[1], a[0]) < std::tuple(b[2], b[1], b[0]);
    }
    CHECK(sorted);
  }
}

TEST_CASE("writers report stream failures") {
  std::ostringstream broken;
  broken.setstate(std::ios::badbit);
  CHECK_THROWS_AS(write2d(build2d(3), Format2D::csv, broken), WriteError);
  CHECK_THROWS_AS(write3d(build3d(2), Format3D::xyz_text, broken), WriteError);
  std::ostringstream fine;
  CHECK_THROWS_AS(write2d(Grid2D(0), Format2D::csv, fine), InvalidArgument);
}

TEST_CASE("format names") {
  for (const auto f : {Format2D::pbm_ascii, Format2D::pbm_binary, Format2D::svg, Format2D::csv})
    CHECK(parse_format2d(format_name(f)) == f);
  for (const auto f : {Format3D::xyz_text, Format3D::obj_mesh})
    CHECK(parse_format3d(format_name(f)) == f);
  CHECK_FALSE(parse_format2d("png"));
  CHECK_FALSE(parse_format3d("stl"));
}
