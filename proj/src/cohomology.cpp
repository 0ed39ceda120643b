#include "surfgenus/cohomology.hpp"

#include <string>

#include "surfgenus/error.hpp"

namespace surfgenus {

namespace {

void check_degree(int k) {
  if (k < 0 || k > 2) throw SurfaceError(ErrorCode::InvalidDegree, "degree " + std::to_string(k));
}

std::vector<std::size_t> flagged(const std::vector<bool>& mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) idx.push_back(i);
  return idx;
}

// Kernel of `delta` restricted to the flagged columns, extended by zero.
std::vector<RationalVector> relative_kernel(const RationalMatrix& delta, const std::vector<bool>& mask) {
  const auto cols = flagged(mask);
  std::vector<RationalVector> basis;
  for (auto& v : kernel_basis(delta.select_columns(cols))) {
    RationalVector full(delta.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = std::move(v[j]);
    basis.push_back(std::move(full));
  }
  return basis;
}

std::vector<RationalVector> columns(const RationalMatrix& m) {
  std::vector<RationalVector> out;
  out.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

struct Ranks {
  std::size_t delta0;
  std::size_t delta1;
};

Ranks ranks_of(const CochainComplex& cx) { return {rank(cx.delta0), rank(cx.delta1)}; }

std::array<std::size_t, 3> betti_from(const CochainComplex& cx, Ranks r) {
  const std::size_t nv = cx.delta0.cols(), ne = cx.edges.size(), nf = cx.triangles.size();
  return {nv - r.delta0, ne - r.delta1 - r.delta0, nf - r.delta1};
}

std::size_t ck_from(const CochainComplex& cx, int k) {
  std::vector<RationalVector> cocycles;
  std::vector<RationalVector> coboundaries;
  switch (k) {
    case 0:
      cocycles = relative_kernel(cx.delta0, cx.relative_vertex_mask);
      break;
    case 1:
      cocycles = relative_kernel(cx.delta1, cx.relative_edge_mask);
      coboundaries = columns(cx.delta0);
      break;
    default: {
      // No 3-simplices: every 2-cochain is a cocycle, and no triangle lies in the boundary.
      const std::size_t nf = cx.triangles.size();
      for (std::size_t t = 0; t < nf; ++t) {
        RationalVector e(nf);
        e[t] = 1;
        cocycles.push_back(std::move(e));
      }
      coboundaries = columns(cx.delta1);
      break;
    }
  }
  return cocycles.size() - intersection_dim(cocycles, coboundaries);
}

}  // namespace

CochainComplex coboundary_matrices(const TriangulatedSurface& s) {
  CochainComplex cx;
  cx.edges.assign(s.edges().begin(), s.edges().end());
  cx.triangles.assign(s.triangle_vertices().begin(), s.triangle_vertices().end());
  const std::size_t nv = s.vertex_count(), ne = s.edge_count(), nf = s.triangle_count();

  cx.delta0 = RationalMatrix(ne, nv);
  for (std::size_t e = 0; e < ne; ++e) {
    cx.delta0(e, cx.edges[e].lo) = -1;
    cx.delta0(e, cx.edges[e].hi) = 1;
  }

  cx.delta1 = RationalMatrix(nf, ne);
  for (std::size_t t = 0; t < nf; ++t) {
    const auto& tv = cx.triangles[t];
    for (int i = 0; i < 3; ++i) {
      const std::size_t e = s.triangle_edges()[t][i];
      // triangle traverses tv[i] -> tv[i+1]; the edge is stored low -> high
      cx.delta1(t, e) = tv[i] < tv[(i + 1) % 3] ? 1 : -1;
    }
  }

  cx.relative_vertex_mask.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) cx.relative_vertex_mask[v] = !s.is_boundary_vertex(v);
  cx.relative_edge_mask.resize(ne);
  for (std::size_t e = 0; e < ne; ++e) cx.relative_edge_mask[e] = !s.is_boundary_edge(e);
  return cx;
}

std::size_t betti(const TriangulatedSurface& s, int k) {
  check_degree(k);
  const auto cx = coboundary_matrices(s);
  return betti_from(cx, ranks_of(cx))[static_cast<std::size_t>(k)];
}

std::size_t ck(const TriangulatedSurface& s, int k) {
  check_degree(k);
  return ck_from(coboundary_matrices(s), k);
}

InvariantReport invariant_report(const TriangulatedSurface& s) {
  InvariantReport r;
  r.vertices = s.vertex_count();
  r.edges = s.edge_count();
  r.faces = s.triangle_count();
  r.euler_characteristic = euler_characteristic(s);
  r.orientable = true;
  r.connected_components = s.component_count();
  r.boundary_loop_count = boundary_loops(s).size();

  const auto cx = coboundary_matrices(s);
  r.betti = betti_from(cx, ranks_of(cx));
  for (int k = 0; k < 3; ++k) r.ck[static_cast<std::size_t>(k)] = ck_from(cx, k);

  if (r.ck[1] % 2 != 0) throw SurfaceError(ErrorCode::OddC1, "c_1 = " + std::to_string(r.ck[1]));
  for (std::size_t k = 0; k < 3; ++k) {
    if (r.ck[k] > r.betti[k] || (s.is_closed() && r.ck[k] != r.betti[k]))
      throw SurfaceError(ErrorCode::OracleMismatch, "c_" + std::to_string(k) + " = " + std::to_string(r.ck[k]) +
                                                        " against b_" + std::to_string(k) + " = " +
                                                        std::to_string(r.betti[k]));
  }
  if (r.connected_components == 1) {
    const std::int64_t expected = 2 - r.euler_characteristic - static_cast<std::int64_t>(r.boundary_loop_count);
    if (expected != static_cast<std::int64_t>(r.ck[1]))
      throw SurfaceError(ErrorCode::OracleMismatch, "c_1 = " + std::to_string(r.ck[1]) +
                                                        " but 2 - chi - loops = " + std::to_string(expected));
    r.genus = r.ck[1] / 2;
  }
  return r;
}

}  // namespace surfgenus
