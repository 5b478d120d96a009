#pragma once

// Byte-exact writers for grids. Newlines are a single '\n' everywhere.
//
//   pbm_ascii   "P1\n<w> <h>\n" then one line per row, digits separated by spaces
//   pbm_binary  "P4\n<w> <h>\n" then rows packed MSB-first, padded to whole bytes
//   svg         one <rect> per filled cell in row-major order, viewBox "0 0 s s"
//   csv         one line per row, comma-separated digits
//   xyz_text    "x y z" per filled voxel ordered by (z, y, x)
//   obj_mesh    boundary faces as triangles, outward CCW winding, shared vertices
//
// 1 means filled throughout.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "pelljeru/jerusalem2d.hpp"
#include "pelljeru/jerusalem3d.hpp"

namespace pelljeru {

enum class Format2D { pbm_ascii, pbm_binary, svg, csv };
enum class Format3D { xyz_text, obj_mesh };

std::optional<Format2D> parse_format2d(std::string_view name);
std::optional<Format3D> parse_format3d(std::string_view name);
std::string_view format_name(Format2D f);
std::string_view format_name(Format3D f);

/// Returns the number of bytes written. Throws WriteError if the stream fails.
std::uint64_t write2d(const Grid2D& grid, Format2D format, std::ostream& sink);
std::uint64_t write3d(const Grid3D& grid, Format3D format, std::ostream& sink);

/// Readers for the text formats, used to check round trips.
Grid2D read_pbm_ascii(std::istream& in);
Grid2D read_csv(std::istream& in);

/// Voxel boundary surface. Vertices are lattice points sorted by (z, y, x);
/// triangles index into `vertices` from 0 and wind counter-clockwise seen from outside.
struct SurfaceMesh {
  std::vector<std::array<std::uint32_t, 3>> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
};

SurfaceMesh surface_mesh(const Grid3D& grid);

}  // namespace pelljeru
