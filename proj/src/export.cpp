#include "pelljeru/export.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "pelljeru/errors.hpp"

namespace pelljeru {
namespace {

class Sink {
 public:
  explicit Sink(std::ostream& os) : os_(os) {}

  void put(std::string_view s) {
    os_.write(s.data(), static_cast<std::streamsize>(s.size()));
    if (!os_) throw WriteError("output stream rejected " + std::to_string(s.size()) + " bytes");
    bytes_ += s.size();
  }

  std::uint64_t finish() {
    os_.flush();
    if (!os_) throw WriteError("output stream failed on flush");
    return bytes_;
  }

 private:
  std::ostream& os_;
  std::uint64_t bytes_ = 0;
};

std::string header(std::string_view magic, std::size_t side) {
  return std::string(magic) + "\n" + std::to_string(side) + " " + std::to_string(side) + "\n";
}

void write_digits(const Grid2D& g, char separator, Sink& sink) {
  std::string line;
  for (std::size_t y = 0; y < g.side(); ++y) {
    line.clear();
    for (std::size_t x = 0; x < g.side(); ++x) {
      if (x != 0) line += separator;
      line += g.cell(x, y) ? '1' : '0';
    }
    line += '\n';
    sink.put(line);
  }
}

void write_pbm_binary(const Grid2D& g, Sink& sink) {
  sink.put(header("P4", g.side()));
  std::string line((g.side() + 7) / 8, '\0');
  for (std::size_t y = 0; y < g.side(); ++y) {
    std::fill(line.begin(), line.end(), '\0');
    for (std::size_t x = 0; x < g.side(); ++x) {
      if (g.cell(x, y)) line[x / 8] = static_cast<char>(line[x / 8] | (0x80 >> (x % 8)));
    }
    sink.put(line);
  }
}

void write_svg(const Grid2D& g, Sink& sink) {
  const std::string s = std::to_string(g.side());
  sink.put("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + s + " " + s + "\">\n");
  std::string line;
  for (std::size_t y = 0; y < g.side(); ++y) {
    for (std::size_t x = 0; x < g.side(); ++x) {
      if (!g.cell(x, y)) continue;
      line = "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
             "\" width=\"1\" height=\"1\" fill=\"black\"/>\n";
      sink.put(line);
    }
  }
  sink.put("</svg>\n");
}

void write_xyz(const Grid3D& g, Sink& sink) {
  std::string line;
  for (std::size_t z = 0; z < g.side(); ++z)
    for (std::size_t y = 0; y < g.side(); ++y)
      for (std::size_t x = 0; x < g.side(); ++x) {
        if (!g.voxel(x, y, z)) continue;
        line = std::to_string(x) + " " + std::to_string(y) + " " + std::to_string(z) + "\n";
        sink.put(line);
      }
}

void write_obj(const Grid3D& g, Sink& sink) {
  const SurfaceMesh mesh = surface_mesh(g);
  std::string line;
  for (const auto& v : mesh.vertices) {
    line = "v " + std::to_string(v[0]) + " " + std::to_string(v[1]) + " " + std::to_string(v[2]) +
           "\n";
    sink.put(line);
  }
  for (const auto& t : mesh.triangles) {
    line = "f " + std::to_string(t[0] + 1) + " " + std::to_string(t[1] + 1) + " " +
           std::to_string(t[2] + 1) + "\n";
    sink.put(line);
  }
}

[[noreturn]] void malformed(const std::string& what) {
  throw InvalidArgument("malformed input: " + what);
}

}  // namespace

std::optional<Format2D> parse_format2d(std::string_view name) {
  if (name == "pbm_ascii") return Format2D::pbm_ascii;
  if (name == "pbm_binary") return Format2D::pbm_binary;
  if (name == "svg") return Format2D::svg;
  if (name == "csv") return Format2D::csv;
  return std::nullopt;
}

std::optional<Format3D> parse_format3d(std::string_view name) {
  if (name == "xyz_text") return Format3D::xyz_text;
  if (name == "obj_mesh") return Format3D::obj_mesh;
  return std::nullopt;
}

std::string_view format_name(Format2D f) {
  switch (f) {
    case Format2D::pbm_ascii: return "pbm_ascii";
    case Format2D::pbm_binary: return "pbm_binary";
    case Format2D::svg: return "svg";
    case Format2D::csv: return "csv";
  }
  return "";
}

std::string_view format_name(Format3D f) {
  switch (f) {
    case Format3D::xyz_text: return "xyz_text";
    case Format3D::obj_mesh: return "obj_mesh";
  }
  return "";
}

std::uint64_t write2d(const Grid2D& grid, Format2D format, std::ostream& sink_stream) {
  if (grid.side() == 0) throw InvalidArgument("cannot export an empty grid");
  Sink sink(sink_stream);
  switch (format) {
    case Format2D::pbm_ascii:
      sink.put(header("P1", grid.side()));
      write_digits(grid, ' ', sink);
      break;
    case Format2D::pbm_binary: write_pbm_binary(grid, sink); break;
    case Format2D::svg: write_svg(grid, sink); break;
    case Format2D::csv: write_digits(grid, ',', sink); break;
  }
  return sink.finish();
}

std::uint64_t write3d(const Grid3D& grid, Format3D format, std::ostream& sink_stream) {
  if (grid.side() == 0) throw InvalidArgument("cannot export an empty grid");
  Sink sink(sink_stream);
  switch (format) {
    case Format3D::xyz_text: write_xyz(grid, sink); break;
    case Format3D::obj_mesh: write_obj(grid, sink); break;
  }
  return sink.finish();
}

Grid2D read_pbm_ascii(std::istream& in) {
  auto next_token = [&in]() {
    std::string tok;
    while (in >> tok) {
      if (tok[0] != '#') return tok;
      std::getline(in, tok);
    }
    return std::string();
  };
  if (next_token() != "P1") malformed("missing P1 header");
  std::size_t width = 0;
  std::size_t height = 0;
  try {
    width = std::stoul(next_token());
    height = std::stoul(next_token());
  } catch (const std::exception&) {
    malformed("bad PBM dimensions");
  }
  if (width != height || width == 0) malformed("PBM image is not a nonempty square");
  Grid2D g(width);
  std::size_t filled = 0;
  char c = 0;
  while (filled < width * height && in.get(c)) {
    if (c == '0' || c == '1') {
      if (c == '1') g.set(filled % width, filled / width);
      ++filled;
    } else if (c == '#') {
      std::string skip;
      std::getline(in, skip);
    } else if (c != ' ' && c != '\n' && c != '\t' && c != '\r') {
      malformed(std::string("unexpected character '") + c + "'");
    }
  }
  if (filled != width * height) malformed("PBM pixel data is truncated");
  return g;
}

Grid2D read_csv(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  const std::size_t side = lines.size();
  if (side == 0) malformed("empty CSV");
  Grid2D g(side);
  for (std::size_t y = 0; y < side; ++y) {
    const std::string& line = lines[y];
    if (line.size() != 2 * side - 1) malformed("CSV row " + std::to_string(y) + " has wrong width");
    for (std::size_t x = 0; x < side; ++x) {
      const char c = line[2 * x];
      if (c != '0' && c != '1') malformed("CSV cell must be 0 or 1");
      if (x + 1 < side && line[2 * x + 1] != ',') malformed("CSV separator must be ','");
      if (c == '1') g.set(x, y);
    }
  }
  return g;
}

SurfaceMesh surface_mesh(const Grid3D& grid) {
  const std::size_t s = grid.side();
  const std::uint64_t lattice = s + 1;
  auto key = [lattice](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    return (z * lattice + y) * lattice + x;
  };
  auto filled = [&](std::ptrdiff_t x, std::ptrdiff_t y, std::ptrdiff_t z) {
    const auto in = [s](std::ptrdiff_t c) { return c >= 0 && static_cast<std::size_t>(c) < s; };
    return in(x) && in(y) && in(z) && grid.voxel(x, y, z);
  };

  // Corner offsets of each face, ordered counter-clockwise seen from outside.
  struct Face {
    int dx, dy, dz;
    std::array<std::array<int, 3>, 4> corners;
  };
  static constexpr std::array<Face, 6> kFaces = {{
      {-1, 0, 0, {{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, 0}}}},
      {+1, 0, 0, {{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}}}},
      {0, -1, 0, {{{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 0, 1}}}},
      {0, +1, 0, {{{0, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 1, 0}}}},
      {0, 0, -1, {{{0, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0}}}},
      {0, 0, +1, {{{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}}}},
  }};

  std::vector<std::array<std::uint64_t, 4>> quads;
  for (std::size_t z = 0; z < s; ++z)
    for (std::size_t y = 0; y < s; ++y)
      for (std::size_t x = 0; x < s; ++x) {
        if (!grid.voxel(x, y, z)) continue;
        const auto ix = static_cast<std::ptrdiff_t>(x);
        const auto iy = static_cast<std::ptrdiff_t>(y);
        const auto iz = static_cast<std::ptrdiff_t>(z);
        for (const Face& f : kFaces) {
          if (filled(ix + f.dx, iy + f.dy, iz + f.dz)) continue;
          std::array<std::uint64_t, 4> q{};
          for (std::size_t c = 0; c < 4; ++c) {
            q[c] = key(x + f.corners[c][0], y + f.corners[c][1], z + f.corners[c][2]);
          }
          quads.push_back(q);
        }
      }

  std::vector<std::uint64_t> keys;
  keys.reserve(quads.size() * 4);
  for (const auto& q : quads) keys.insert(keys.end(), q.begin(), q.end());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  SurfaceMesh mesh;
  mesh.vertices.reserve(keys.size());
  for (const auto k : keys) {
    mesh.vertices.push_back({static_cast<std::uint32_t>(k % lattice),
                             static_cast<std::uint32_t>((k / lattice) % lattice),
                             static_cast<std::uint32_t>(k / (lattice * lattice))});
  }
  auto index = [&keys](std::uint64_t k) {
    return static_cast<std::uint32_t>(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
  };
  mesh.triangles.reserve(quads.size() * 2);
  for (const auto& q : quads) {
    const std::array<std::uint32_t, 4> i = {index(q[0]), index(q[1]), index(q[2]), index(q[3])};
    mesh.triangles.push_back({i[0], i[1], i[2]});
    mesh.triangles.push_back({i[0], i[2], i[3]});
  }
  return mesh;
}

}  // namespace pelljeru
