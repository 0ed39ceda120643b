#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace surfgenus {

// Vertex labels as they appear in input files. Need not be contiguous.
using VertexId = std::uint64_t;

// Ordered vertex triple; the cyclic order carries the orientation.
using Triangle = std::array<VertexId, 3>;

// Edge between dense vertex indices, always stored with lo < hi.
struct Edge {
  std::size_t lo;
  std::size_t hi;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// One boundary circle, traced in the direction induced by the surface orientation.
struct BoundaryLoop {
  std::vector<VertexId> vertices;
};

/// A validated, consistently oriented simplicial surface, possibly with boundary.
///
/// Vertices are densified internally: dense index i corresponds to vertex_ids()[i],
/// and vertex_ids() is sorted, so comparing dense indices compares labels.
/// Construct through build_surface(); every instance satisfies the manifold,
/// link and orientation invariants.
class TriangulatedSurface {
 public:
  TriangulatedSurface() = default;

  std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t triangle_count() const noexcept { return triangles_.size(); }

  std::span<const VertexId> vertex_ids() const noexcept { return vertex_ids_; }
  // Oriented triangles in vertex labels, in input order.
  std::span<const Triangle> triangles() const noexcept { return triangles_; }
  // Same triangles in dense vertex indices.
  std::span<const std::array<std::size_t, 3>> triangle_vertices() const noexcept { return tri_verts_; }
  // Sorted list of edges.
  std::span<const Edge> edges() const noexcept { return edges_; }
  // Edge indices of triangle t: (v0,v1), (v1,v2), (v2,v0).
  std::span<const std::array<std::size_t, 3>> triangle_edges() const noexcept { return tri_edges_; }

  bool is_boundary_edge(std::size_t e) const { return boundary_edge_[e]; }
  bool is_boundary_vertex(std::size_t v) const { return boundary_vertex_[v]; }
  std::size_t boundary_edge_count() const noexcept;
  bool is_closed() const noexcept { return boundary_edge_count() == 0; }

  // Dense index of a vertex label, if present.
  std::optional<std::size_t> vertex_index(VertexId id) const;
  // Index of the edge joining two dense vertex indices, if present.
  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const;

  // Triangles incident to edge e (one or two entries).
  std::span<const std::size_t> edge_triangles(std::size_t e) const;

  std::size_t component_count() const noexcept { return component_count_; }
  std::size_t triangle_component(std::size_t t) const { return tri_component_[t]; }

  // True when none of the triangle's vertices lies on the boundary.
  bool is_interior_triangle(std::size_t t) const;

  VertexId max_vertex_id() const noexcept { return vertex_ids_.empty() ? 0 : vertex_ids_.back(); }

 private:
  friend TriangulatedSurface build_surface(std::span<const Triangle> triangles);

  std::vector<VertexId> vertex_ids_;
  std::vector<Triangle> triangles_;
  std::vector<std::array<std::size_t, 3>> tri_verts_;
  std::vector<Edge> edges_;
  std::vector<std::array<std::size_t, 3>> tri_edges_;
  std::vector<std::size_t> edge_tri_offsets_;
  std::vector<std::size_t> edge_tri_data_;
  std::vector<bool> boundary_edge_;
  std::vector<bool> boundary_vertex_;
  std::vector<std::size_t> tri_component_;
  std::size_t component_count_ = 0;
};

/// Validates a triangle list and fixes a consistent orientation.
///
/// Orientation is propagated greedily across shared edges from the first
/// triangle of each component; the seed keeps its given order, so already
/// coherent input is stored unchanged. Throws SurfaceError with one of
/// DegenerateTriangle, EmptySurface, NonManifoldEdge, DuplicateTriangle,
/// BadVertexLink or NonOrientable.
TriangulatedSurface build_surface(std::span<const Triangle> triangles);

std::vector<BoundaryLoop> boundary_loops(const TriangulatedSurface& s);

std::int64_t euler_characteristic(const TriangulatedSurface& s);

// Barycentric subdivision together with the labels it introduced.
struct Subdivision {
  TriangulatedSurface surface;
  std::vector<VertexId> edge_midpoints;  // indexed by edge of the input
  std::vector<VertexId> face_centers;    // indexed by triangle of the input
};

// Triangle t of the input becomes triangles 6t..6t+5 of the output.
Subdivision subdivide(const TriangulatedSurface& s);

TriangulatedSurface barycentric_subdivide(const TriangulatedSurface& s);

// Induced surface on the kept triangles; throws InvalidSubcomplex if it is not a surface.
TriangulatedSurface subsurface(const TriangulatedSurface& s, std::span<const std::size_t> keep);

// Cones a fresh apex over every boundary loop. Closed input is returned unchanged.
TriangulatedSurface cap_boundaries(const TriangulatedSurface& s);

}  // namespace surfgenus
