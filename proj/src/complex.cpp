#include "surfgenus/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

#include "surfgenus/error.hpp"

namespace surfgenus {

namespace {

std::string describe(const Triangle& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

// +1 if the triangle traverses lo->hi, -1 if it traverses hi->lo.
int edge_direction(const std::array<std::size_t, 3>& tri, std::size_t lo, std::size_t hi) {
  for (int i = 0; i < 3; ++i) {
    std::size_t a = tri[i];
    std::size_t b = tri[(i + 1) % 3];
    if (a == lo && b == hi) return 1;
    if (a == hi && b == lo) return -1;
  }
  return 0;
}

}  // namespace

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::BadVertexLink: return "BadVertexLink";
    case ErrorCode::DuplicateTriangle: return "DuplicateTriangle";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::EmptySurface: return "EmptySurface";
    case ErrorCode::InvalidSubcomplex: return "InvalidSubcomplex";
    case ErrorCode::TriangleIndexOutOfRange: return "TriangleIndexOutOfRange";
    case ErrorCode::TriangleTouchesBoundary: return "TriangleTouchesBoundary";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::OddC1: return "OddC1";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::BadInclusion: return "BadInclusion";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

std::size_t TriangulatedSurface::boundary_edge_count() const noexcept {
  return static_cast<std::size_t>(std::count(boundary_edge_.begin(), boundary_edge_.end(), true));
}

std::optional<std::size_t> TriangulatedSurface::vertex_index(VertexId id) const {
  auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
  if (it == vertex_ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertex_ids_.begin());
}

std::optional<std::size_t> TriangulatedSurface::edge_index(std::size_t a, std::size_t b) const {
  Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::span<const std::size_t> TriangulatedSurface::edge_triangles(std::size_t e) const {
  return std::span<const std::size_t>(edge_tri_data_)
      .subspan(edge_tri_offsets_[e], edge_tri_offsets_[e + 1] - edge_tri_offsets_[e]);
}

bool TriangulatedSurface::is_interior_triangle(std::size_t t) const {
  const auto& tv = tri_verts_[t];
  return !boundary_vertex_[tv[0]] && !boundary_vertex_[tv[1]] && !boundary_vertex_[tv[2]];
}

TriangulatedSurface build_surface(std::span<const Triangle> triangles) {
  if (triangles.empty()) throw SurfaceError(ErrorCode::EmptySurface, "no triangles");

  TriangulatedSurface s;
  for (const Triangle& t : triangles) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw SurfaceError(ErrorCode::DegenerateTriangle, describe(t));
  }

  // Densify labels.
  for (const Triangle& t : triangles) s.vertex_ids_.insert(s.vertex_ids_.end(), t.begin(), t.end());
  std::sort(s.vertex_ids_.begin(), s.vertex_ids_.end());
  s.vertex_ids_.erase(std::unique(s.vertex_ids_.begin(), s.vertex_ids_.end()), s.vertex_ids_.end());
  const std::size_t nv = s.vertex_ids_.size();
  const std::size_t nf = triangles.size();

  s.triangles_.assign(triangles.begin(), triangles.end());
  s.tri_verts_.resize(nf);
  for (std::size_t t = 0; t < nf; ++t)
    for (int i = 0; i < 3; ++i) s.tri_verts_[t][i] = *s.vertex_index(triangles[t][i]);

  {
    std::vector<std::array<std::size_t, 3>> sorted(s.tri_verts_);
    for (auto& tv : sorted) std::sort(tv.begin(), tv.end());
    std::vector<std::size_t> order(nf);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sorted[a] < sorted[b]; });
    for (std::size_t i = 1; i < nf; ++i)
      if (sorted[order[i]] == sorted[order[i - 1]])
        throw SurfaceError(ErrorCode::DuplicateTriangle, describe(triangles[order[i]]));
  }

  // Edges and their incident triangles.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> incidences;
  incidences.reserve(3 * nf);
  for (std::size_t t = 0; t < nf; ++t) {
    for (int i = 0; i < 3; ++i) {
      std::size_t a = s.tri_verts_[t][i];
      std::size_t b = s.tri_verts_[t][(i + 1) % 3];
      incidences.emplace_back(std::min(a, b), std::max(a, b), t);
    }
  }
  std::sort(incidences.begin(), incidences.end());
  s.edge_tri_offsets_.push_back(0);
  for (std::size_t i = 0; i < incidences.size();) {
    auto [lo, hi, t0] = incidences[i];
    std::size_t j = i;
    while (j < incidences.size() && std::get<0>(incidences[j]) == lo && std::get<1>(incidences[j]) == hi) {
      s.edge_tri_data_.push_back(std::get<2>(incidences[j]));
      ++j;
    }
    if (j - i > 2)
      throw SurfaceError(ErrorCode::NonManifoldEdge, "edge {" + std::to_string(s.vertex_ids_[lo]) + "," +
                                                         std::to_string(s.vertex_ids_[hi]) + "} lies in " +
                                                         std::to_string(j - i) + " triangles");
    s.edges_.push_back(Edge{lo, hi});
    s.boundary_edge_.push_back(j - i == 1);
    s.edge_tri_offsets_.push_back(s.edge_tri_data_.size());
    i = j;
  }
  s.tri_edges_.resize(nf);
  for (std::size_t t = 0; t < nf; ++t)
    for (int i = 0; i < 3; ++i) s.tri_edges_[t][i] = *s.edge_index(s.tri_verts_[t][i], s.tri_verts_[t][(i + 1) % 3]);

  s.boundary_vertex_.assign(nv, false);
  for (std::size_t e = 0; e < s.edges_.size(); ++e) {
    if (s.boundary_edge_[e]) {
      s.boundary_vertex_[s.edges_[e].lo] = true;
      s.boundary_vertex_[s.edges_[e].hi] = true;
    }
  }

  // Vertex links: with every edge in at most two triangles, each link vertex has
  // degree at most two, so a connected link is a simple path or a simple cycle.
  {
    std::vector<std::vector<std::size_t>> vertex_tris(nv);
    for (std::size_t t = 0; t < nf; ++t)
      for (std::size_t v : s.tri_verts_[t]) vertex_tris[v].push_back(t);
    std::vector<std::size_t> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> link;
    for (std::size_t v = 0; v < nv; ++v) {
      nodes.clear();
      link.clear();
      for (std::size_t t : vertex_tris[v]) {
        std::array<std::size_t, 2> opp{};
        int k = 0;
        for (std::size_t w : s.tri_verts_[t])
          if (w != v) opp[k++] = w;
        link.emplace_back(opp[0], opp[1]);
        nodes.push_back(opp[0]);
        nodes.push_back(opp[1]);
      }
      std::sort(nodes.begin(), nodes.end());
      nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
      auto local = [&](std::size_t w) {
        return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), w) - nodes.begin());
      };
      std::vector<std::size_t> parent(nodes.size());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      std::size_t groups = nodes.size();
      for (auto [a, b] : link) {
        std::size_t ra = find(local(a)), rb = find(local(b));
        if (ra != rb) {
          parent[ra] = rb;
          --groups;
        }
      }
      if (groups != 1)
        throw SurfaceError(ErrorCode::BadVertexLink, "link of vertex " + std::to_string(s.vertex_ids_[v]) +
                                                         " has " + std::to_string(groups) + " components");
    }
  }

  // Orientation propagation and components.
  s.tri_component_.assign(nf, nf);
  std::vector<bool> flipped(nf, false);
  auto oriented = [&](std::size_t t) {
    auto tv = s.tri_verts_[t];
    if (flipped[t]) std::swap(tv[1], tv[2]);
    return tv;
  };
  for (std::size_t seed = 0; seed < nf; ++seed) {
    if (s.tri_component_[seed] != nf) continue;
    const std::size_t comp = s.component_count_++;
    s.tri_component_[seed] = comp;
    std::queue<std::size_t> frontier;
    frontier.push(seed);
    while (!frontier.empty()) {
      std::size_t t = frontier.front();
      frontier.pop();
      const auto tv = oriented(t);
      for (std::size_t e : s.tri_edges_[t]) {
        const Edge edge = s.edges_[e];
        const int dir = edge_direction(tv, edge.lo, edge.hi);
        for (std::size_t n : s.edge_triangles(e)) {
          if (n == t) continue;
          if (s.tri_component_[n] == nf) {
            s.tri_component_[n] = comp;
            if (edge_direction(s.tri_verts_[n], edge.lo, edge.hi) == dir) flipped[n] = true;
            frontier.push(n);
          } else if (edge_direction(oriented(n), edge.lo, edge.hi) == dir) {
            throw SurfaceError(ErrorCode::NonOrientable,
                               "inconsistent orientation across edge {" + std::to_string(s.vertex_ids_[edge.lo]) +
                                   "," + std::to_string(s.vertex_ids_[edge.hi]) + "}");
          }
        }
      }
    }
  }
  for (std::size_t t = 0; t < nf; ++t) {
    if (!flipped[t]) continue;
    std::swap(s.tri_verts_[t][1], s.tri_verts_[t][2]);
    std::swap(s.triangles_[t][1], s.triangles_[t][2]);
    auto& te = s.tri_edges_[t];
    // (v0,v2),(v2,v1),(v1,v0) after the swap
    te = {te[2], te[1], te[0]};
  }
  return s;
}

std::vector<BoundaryLoop> boundary_loops(const TriangulatedSurface& s) {
  const std::size_t nv = s.vertex_count();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> next(nv, none);
  for (std::size_t t = 0; t < s.triangle_count(); ++t) {
    const auto& tv = s.triangle_vertices()[t];
    for (int i = 0; i < 3; ++i)
      if (s.is_boundary_edge(s.triangle_edges()[t][i])) next[tv[i]] = tv[(i + 1) % 3];
  }
  std::vector<BoundaryLoop> loops;
  std::vector<bool> seen(nv, false);
  for (std::size_t v = 0; v < nv; ++v) {
    if (next[v] == none || seen[v]) continue;
    BoundaryLoop loop;
    for (std::size_t w = v; !seen[w]; w = next[w]) {
      seen[w] = true;
      loop.vertices.push_back(s.vertex_ids()[w]);
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

std::int64_t euler_characteristic(const TriangulatedSurface& s) {
  return static_cast<std::int64_t>(s.vertex_count()) - static_cast<std::int64_t>(s.edge_count()) +
         static_cast<std::int64_t>(s.triangle_count());
}

Subdivision subdivide(const TriangulatedSurface& s) {
  Subdivision out;
  VertexId next_id = s.max_vertex_id() + 1;
  out.edge_midpoints.resize(s.edge_count());
  for (auto& m : out.edge_midpoints) m = next_id++;
  out.face_centers.resize(s.triangle_count());
  for (auto& c : out.face_centers) c = next_id++;

  std::vector<Triangle> tris;
  tris.reserve(6 * s.triangle_count());
  for (std::size_t t = 0; t < s.triangle_count(); ++t) {
    const Triangle& abc = s.triangles()[t];
    const auto& te = s.triangle_edges()[t];
    const VertexId center = out.face_centers[t];
    for (int i = 0; i < 3; ++i) {
      const VertexId mid = out.edge_midpoints[te[i]];
      tris.push_back({abc[i], mid, center});
      tris.push_back({mid, abc[(i + 1) % 3], center});
    }
  }
  out.surface = build_surface(tris);
  return out;
}

TriangulatedSurface barycentric_subdivide(const TriangulatedSurface& s) { return subdivide(s).surface; }

TriangulatedSurface subsurface(const TriangulatedSurface& s, std::span<const std::size_t> keep) {
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty()) throw SurfaceError(ErrorCode::InvalidSubcomplex, "empty keep set");
  if (kept.back() >= s.triangle_count())
    throw SurfaceError(ErrorCode::TriangleIndexOutOfRange, "triangle " + std::to_string(kept.back()));

  std::vector<Triangle> tris;
  tris.reserve(kept.size());
  for (std::size_t t : kept) tris.push_back(s.triangles()[t]);
  try {
    return build_surface(tris);
  } catch (const SurfaceError& e) {
    throw SurfaceError(ErrorCode::InvalidSubcomplex, e.what());
  }
}

TriangulatedSurface cap_boundaries(const TriangulatedSurface& s) {
  const auto loops = boundary_loops(s);
  if (loops.empty()) return s;
  std::vector<Triangle> tris(s.triangles().begin(), s.triangles().end());
  VertexId apex = s.max_vertex_id() + 1;
  for (const BoundaryLoop& loop : loops) {
    const auto& lv = loop.vertices;
    for (std::size_t i = 0; i < lv.size(); ++i) tris.push_back({apex, lv[(i + 1) % lv.size()], lv[i]});
    ++apex;
  }
  return build_surface(tris);
}

}  // namespace surfgenus
