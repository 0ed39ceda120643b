#include "surfgenus/surgery.hpp"

#include <string>
#include <unordered_map>
#include <vector>

#include "surfgenus/error.hpp"

namespace surfgenus {

namespace {

void require_interior(const TriangulatedSurface& s, std::size_t t) {
  if (t >= s.triangle_count())
    throw SurfaceError(ErrorCode::TriangleIndexOutOfRange,
                       "triangle " + std::to_string(t) + " of " + std::to_string(s.triangle_count()));
  if (!s.is_interior_triangle(t))
    throw SurfaceError(ErrorCode::TriangleTouchesBoundary, "triangle " + std::to_string(t));
}

}  // namespace

TriangulatedSurface remove_ball(const TriangulatedSurface& s, std::size_t t) {
  require_interior(s, t);
  std::vector<Triangle> tris;
  tris.reserve(s.triangle_count() - 1);
  for (std::size_t i = 0; i < s.triangle_count(); ++i)
    if (i != t) tris.push_back(s.triangles()[i]);
  return build_surface(tris);
}

TriangulatedSurface connected_sum(const TriangulatedSurface& a, const TriangulatedSurface& b, std::size_t ta,
                                  std::size_t tb) {
  if (a.component_count() != 1) throw SurfaceError(ErrorCode::NotConnected, "first operand");
  if (b.component_count() != 1) throw SurfaceError(ErrorCode::NotConnected, "second operand");
  require_interior(a, ta);
  require_interior(b, tb);

  const Subdivision sa = subdivide(a);
  const Subdivision sb = subdivide(b);

  // Seam map: corners (x,y,z) of tb go to corners (p,r,q) of ta = (p,q,r), which
  // reverses the cyclic order; midpoints follow their edges.
  const Triangle& corner_a = a.triangles()[ta];
  const Triangle& corner_b = b.triangles()[tb];
  std::unordered_map<VertexId, VertexId> seam;
  const Triangle image{corner_a[0], corner_a[2], corner_a[1]};
  for (int i = 0; i < 3; ++i) seam[corner_b[i]] = image[i];
  auto midpoint = [](const TriangulatedSurface& s, const Subdivision& sub, VertexId u, VertexId v) {
    return sub.edge_midpoints[*s.edge_index(*s.vertex_index(u), *s.vertex_index(v))];
  };
  for (int i = 0; i < 3; ++i) {
    const VertexId u = corner_b[i], v = corner_b[(i + 1) % 3];
    seam[midpoint(b, sb, u, v)] = midpoint(a, sa, seam[u], seam[v]);
  }

  const VertexId offset = sa.surface.max_vertex_id() + 1;
  auto relabel = [&](VertexId id) {
    auto it = seam.find(id);
    return it != seam.end() ? it->second : id + offset;
  };

  std::vector<Triangle> tris;
  tris.reserve(sa.surface.triangle_count() + sb.surface.triangle_count() - 12);
  for (std::size_t t = 0; t < sa.surface.triangle_count(); ++t)
    if (t / 6 != ta) tris.push_back(sa.surface.triangles()[t]);
  for (std::size_t t = 0; t < sb.surface.triangle_count(); ++t) {
    if (t / 6 == tb) continue;
    const Triangle& tri = sb.surface.triangles()[t];
    tris.push_back({relabel(tri[0]), relabel(tri[1]), relabel(tri[2])});
  }
  return build_surface(tris);
}

}  // namespace surfgenus
