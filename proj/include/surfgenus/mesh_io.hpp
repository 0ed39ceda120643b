#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "surfgenus/complex.hpp"

namespace surfgenus {

enum class MeshFormat { Tri, Off };

struct MeshFile {
  std::filesystem::path path;
  MeshFormat format = MeshFormat::Tri;
  std::vector<Triangle> triangles;
};

// TRI: one `t <a> <b> <c>` per line, `#` starts a comment, blank lines ignored.
std::vector<Triangle> parse_tri(std::string_view text);

// OFF: `OFF` header, `nv nf [ne]`, nv vertex lines (ignored), nf faces `3 a b c`.
// Faces with other than three vertices are a ParseError.
std::vector<Triangle> parse_off(std::string_view text);

// Reads a mesh file; OFF is chosen by a `.off` extension or an `OFF` header.
MeshFile read_mesh(const std::filesystem::path& path);

std::string write_tri(const TriangulatedSurface& s);

}  // namespace surfgenus
