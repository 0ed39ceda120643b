#include "surfgenus/fixtures.hpp"

#include <algorithm>
#include <array>

#include "surfgenus/error.hpp"

namespace surfgenus {

namespace {

constexpr VertexId kRing = 6;  // vertices per ring

VertexId ring_vertex(std::size_t ring, std::size_t i) { return ring * kRing + (i % kRing); }

// First triangle type of band `ring` at angular position i.
Triangle band_lower(std::size_t ring, std::size_t i) {
  return {ring_vertex(ring, i), ring_vertex(ring, i + 1), ring_vertex(ring + 1, i + 1)};
}

}  // namespace

TriangulatedSurface tetrahedron() {
  const std::array<Triangle, 4> t{{{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}}};
  return build_surface(t);
}

TriangulatedSurface single_triangle() {
  const std::array<Triangle, 1> t{{{0, 1, 2}}};
  return build_surface(t);
}

TriangulatedSurface torus7() {
  std::vector<Triangle> t;
  for (VertexId i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 3) % 7, (i + 2) % 7});
  }
  return build_surface(t);
}

TriangulatedSurface annulus() {
  const std::array<Triangle, 6> t{{{0, 1, 4}, {0, 4, 3}, {1, 2, 5}, {1, 5, 4}, {2, 0, 3}, {2, 3, 5}}};
  return build_surface(t);
}

std::vector<Triangle> mobius_strip() {
  std::vector<Triangle> t;
  for (VertexId i = 0; i < 5; ++i) t.push_back({i, (i + 1) % 5, (i + 2) % 5});
  return t;
}

ChainSurface chain_surface(std::span<const ChainBlock> blocks, bool cap_start, bool cap_end) {
  if (blocks.empty()) throw SurfaceError(ErrorCode::BadParams, "chain needs at least one block");
  const std::size_t last_ring = 3 * blocks.size();
  const VertexId start_apex = ring_vertex(last_ring + 1, 0);
  const VertexId end_apex = ring_vertex(last_ring + 1, 1);

  std::vector<Triangle> tris;
  std::vector<std::vector<std::size_t>> membership(blocks.size());
  auto add = [&](std::size_t block, const Triangle& t) {
    membership[block].push_back(tris.size());
    tris.push_back(t);
  };

  if (cap_start)
    for (std::size_t i = 0; i < kRing; ++i) add(0, {start_apex, ring_vertex(0, i + 1), ring_vertex(0, i)});

  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const std::size_t middle = 3 * k + 1;
    std::vector<Triangle> removed;
    if (blocks[k] == ChainBlock::Hole) removed = {band_lower(middle, 0)};
    if (blocks[k] == ChainBlock::Handle) removed = {band_lower(middle, 0), band_lower(middle, kRing / 2)};

    for (std::size_t ring = 3 * k; ring < 3 * k + 3; ++ring) {
      for (std::size_t i = 0; i < kRing; ++i) {
        const Triangle lower = band_lower(ring, i);
        if (std::find(removed.begin(), removed.end(), lower) == removed.end()) add(k, lower);
        add(k, {ring_vertex(ring, i), ring_vertex(ring + 1, i + 1), ring_vertex(ring + 1, i)});
      }
    }

    if (blocks[k] == ChainBlock::Handle) {
      // Tube carrying the same directed edges as the two removed triangles.
      const Triangle& a = removed[0];
      const Triangle& b = removed[1];
      const Triangle w{b[0], b[2], b[1]};
      for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        add(k, {a[i], a[j], w[j]});
        add(k, {a[i], w[j], w[i]});
      }
    }
  }

  if (cap_end)
    for (std::size_t i = 0; i < kRing; ++i)
      add(blocks.size() - 1, {end_apex, ring_vertex(last_ring, i), ring_vertex(last_ring, i + 1)});

  return ChainSurface{build_surface(tris), std::move(membership)};
}

TriangulatedSurface surface_of_type(std::size_t genus, std::size_t boundary_loops) {
  std::vector<ChainBlock> blocks(genus, ChainBlock::Handle);
  if (blocks.empty()) blocks.push_back(ChainBlock::Plain);
  for (std::size_t h = 1; h < boundary_loops; ++h) blocks.push_back(ChainBlock::Hole);
  return chain_surface(blocks, true, boundary_loops == 0).surface;
}

TriangulatedSurface ladder(std::size_t n) {
  if (n == 0) throw SurfaceError(ErrorCode::BadParams, "ladder needs at least one handle");
  const std::vector<ChainBlock> blocks(n, ChainBlock::Handle);
  return chain_surface(blocks, false, false).surface;
}

TriangulatedSurface pair_of_pants() { return surface_of_type(0, 3); }

}  // namespace surfgenus
