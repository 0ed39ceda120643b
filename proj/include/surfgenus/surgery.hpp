#pragma once

#include <cstddef>

#include "surfgenus/complex.hpp"

namespace surfgenus {

// Deletes triangle t, opening a new boundary loop along its three edges.
// Throws TriangleTouchesBoundary if any vertex of t is on the boundary.
TriangulatedSurface remove_ball(const TriangulatedSurface& s, std::size_t t);

/// Connected sum of two connected surfaces at interior triangles ta and tb.
///
/// Both inputs are subdivided once; the six children of ta (resp. tb) are removed,
/// leaving hexagonal holes through the triangle's corners and edge midpoints, and
/// the holes are identified with opposite orientations. Labels of `a` are kept;
/// labels of `b` away from the seam are shifted past those of the subdivided `a`.
TriangulatedSurface connected_sum(const TriangulatedSurface& a, const TriangulatedSurface& b, std::size_t ta,
                                  std::size_t tb);

}  // namespace surfgenus
