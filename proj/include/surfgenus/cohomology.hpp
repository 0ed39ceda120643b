#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "surfgenus/complex.hpp"
#include "surfgenus/linalg.hpp"

namespace surfgenus {

/// Simplicial cochain complex of an oriented surface.
///
/// Vertices use the surface's dense indexing, edges its sorted edge list and
/// triangles their input order. delta0 is E x V, delta1 is F x E. The masks
/// flag the simplices not contained in the boundary; cochains supported on
/// flagged simplices stand in for compactly supported forms of the interior.
struct CochainComplex {
  std::vector<Edge> edges;
  std::vector<std::array<std::size_t, 3>> triangles;
  RationalMatrix delta0;
  RationalMatrix delta1;
  std::vector<bool> relative_vertex_mask;
  std::vector<bool> relative_edge_mask;
};

CochainComplex coboundary_matrices(const TriangulatedSurface& s);

// Absolute Betti number over the rationals; k must be 0, 1 or 2.
std::size_t betti(const TriangulatedSurface& s, int k);

/// Rank of compactly supported cohomology in ordinary cohomology, in degree k.
///
/// Computed as dim Z_rel^k - dim(Z_rel^k ∩ B^k), where Z_rel^k are the cocycles
/// vanishing on boundary k-simplices and B^k is the image of delta^{k-1}.
std::size_t ck(const TriangulatedSurface& s, int k);

struct InvariantReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::int64_t euler_characteristic = 0;
  bool orientable = true;
  std::size_t connected_components = 0;
  std::size_t boundary_loop_count = 0;
  std::array<std::size_t, 3> betti{};
  std::array<std::size_t, 3> ck{};
  std::optional<std::size_t> genus;  // connected surfaces only

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Full invariant record for a surface.
///
/// Cross-checks the cohomological numbers before returning: c_1 must be even
/// (OddC1), ck <= betti with equality on closed surfaces, and for connected
/// surfaces c_1 = 2 - chi - #loops (OracleMismatch otherwise).
InvariantReport invariant_report(const TriangulatedSurface& s);

}  // namespace surfgenus
