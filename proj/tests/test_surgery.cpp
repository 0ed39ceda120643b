#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "surfgenus/cohomology.hpp"
#include "surfgenus/error.hpp"
#include "surfgenus/fixtures.hpp"
#include "surfgenus/surgery.hpp"

using namespace surfgenus;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const SurfaceError& e) {
    return e.code();
  }
  FAIL("expected a SurfaceError");
  return ErrorCode::IoError;
}

std::size_t first_interior(const TriangulatedSurface& s) {
  for (std::size_t t = 0; t < s.triangle_count(); ++t)
    if (s.is_interior_triangle(t)) return t;
  FAIL("no interior triangle");
  return 0;
}

}  // namespace

TEST_CASE("remove_ball") {
  const auto disk = remove_ball(tetrahedron(), 0);
  CHECK(disk.triangle_count() == 3);
  CHECK(boundary_loops(disk).size() == 1);
  CHECK(ck(disk, 1) == 0);

  const auto punctured = remove_ball(torus7(), 3);
  const auto r = invariant_report(punctured);
  CHECK(r.ck[1] == 2);
  CHECK(r.ck[2] == 0);
  CHECK(r.ck[0] == 0);
  const auto loops = boundary_loops(punctured);
  REQUIRE(loops.size() == 1);
  CHECK(loops[0].vertices.size() == 3);
}

TEST_CASE("remove_ball: error paths") {
  CHECK(code_of([] { remove_ball(single_triangle(), 0); }) == ErrorCode::TriangleTouchesBoundary);
  CHECK(code_of([] { remove_ball(torus7(), 14); }) == ErrorCode::TriangleIndexOutOfRange);
  // a triangle sharing a vertex with an existing hole
  const auto punctured = remove_ball(torus7(), 0);
  CHECK(code_of([&] { remove_ball(punctured, 0); }) == ErrorCode::TriangleTouchesBoundary);
}

TEST_CASE("remove_ball then cap restores the report") {
  std::mt19937 rng(5);
  for (const auto& s : {tetrahedron(), torus7(), surface_of_type(2, 0), surface_of_type(1, 2)}) {
    std::uniform_int_distribution<std::size_t> pick(0, s.triangle_count() - 1);
    std::size_t t = pick(rng);
    while (!s.is_interior_triangle(t)) t = pick(rng);
    auto before = invariant_report(s);
    auto after = invariant_report(cap_boundaries(remove_ball(s, t)));
    // capping closes every loop, including the pre-existing ones
    auto expected = invariant_report(cap_boundaries(s));
    before.vertices = after.vertices = expected.vertices = 0;
    before.edges = after.edges = expected.edges = 0;
    before.faces = after.faces = expected.faces = 0;
    CHECK(after == expected);
    if (s.is_closed()) CHECK(after == before);
  }
}

TEST_CASE("connected_sum") {
  const auto tt = invariant_report(connected_sum(torus7(), torus7(), 0, 5));
  CHECK(tt.ck[1] == 4);
  CHECK(tt.genus == 2);

  const auto ss = invariant_report(connected_sum(tetrahedron(), tetrahedron(), 0, 0));
  CHECK(ss.ck == std::array<std::size_t, 3>{1, 0, 1});
  CHECK(ss.euler_characteristic == 2);

  const auto ts = invariant_report(connected_sum(torus7(), tetrahedron(), 2, 1));
  CHECK(ts.ck[1] == 2);
}

TEST_CASE("connected_sum: simplex counts and chi") {
  // after one subdivision each side loses 6 faces and the hexagon is shared:
  // chi = chi_a + chi_b - 2
  for (const auto& [a, b] : {std::pair{tetrahedron(), torus7()}, std::pair{torus7(), surface_of_type(2, 0)},
                             std::pair{surface_of_type(1, 2), surface_of_type(0, 1)}}) {
    const auto sum = connected_sum(a, b, first_interior(a), first_interior(b));
    CHECK(sum.triangle_count() == 6 * (a.triangle_count() + b.triangle_count()) - 12);
    CHECK(euler_characteristic(sum) == euler_characteristic(a) + euler_characteristic(b) - 2);
    CHECK(sum.component_count() == 1);
    const auto r = invariant_report(sum);
    CHECK(r.ck[1] == ck(a, 1) + ck(b, 1));
    CHECK(*r.genus == *invariant_report(a).genus + *invariant_report(b).genus);
    CHECK(r.boundary_loop_count == boundary_loops(a).size() + boundary_loops(b).size());
  }
}

TEST_CASE("connected_sum: error paths") {
  const auto split = build_surface(std::vector<Triangle>{{0, 1, 2}, {3, 4, 5}});
  CHECK(code_of([&] { connected_sum(split, torus7(), 0, 0); }) == ErrorCode::NotConnected);
  CHECK(code_of([&] { connected_sum(torus7(), split, 0, 0); }) == ErrorCode::NotConnected);
  CHECK(code_of([] { connected_sum(torus7(), single_triangle(), 0, 0); }) == ErrorCode::TriangleTouchesBoundary);
}
