#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "surfgenus/complex.hpp"

namespace surfgenus {

// Boundary of the 3-simplex.
TriangulatedSurface tetrahedron();
// A single 2-simplex (a disk).
TriangulatedSurface single_triangle();
// Minimal 7-vertex torus (V=7, E=21, F=14).
TriangulatedSurface torus7();
// Annulus between the 3-cycles (0,1,2) and (3,4,5): V=6, E=12, F=6.
TriangulatedSurface annulus();
// Five-triangle Moebius strip on five vertices. Returned as raw triangles since
// build_surface rejects it.
std::vector<Triangle> mobius_strip();

/// Pieces of a "chain" surface: a long tube of hexagonal rings, three bands of
/// 12 triangles per block.
///
///   Plain   an annulus (36 triangles)
///   Hole    an annulus with one interior triangle removed (35 triangles, one extra loop)
///   Handle  an annulus with two far-apart interior triangles replaced by a
///           3-prism tube (34 + 6 = 40 triangles, genus + 1)
///
/// Optional caps cone one apex over the first and/or last ring (6 triangles each);
/// the start cap belongs to the first block and the end cap to the last.
enum class ChainBlock { Plain, Hole, Handle };

struct ChainSurface {
  TriangulatedSurface surface;
  // Triangle indices of each block, in block order.
  std::vector<std::vector<std::size_t>> block_triangles;
};

ChainSurface chain_surface(std::span<const ChainBlock> blocks, bool cap_start, bool cap_end);

// Connected orientable surface of the given genus with the given number of boundary loops.
TriangulatedSurface surface_of_type(std::size_t genus, std::size_t boundary_loops);

// Genus-n surface with two boundary loops (a chain of n handle blocks). n >= 1.
TriangulatedSurface ladder(std::size_t n);

// Sphere with three holes.
TriangulatedSurface pair_of_pants();

}  // namespace surfgenus
