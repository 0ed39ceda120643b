#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "surfgenus/cohomology.hpp"
#include "surfgenus/error.hpp"
#include "surfgenus/exhaustion.hpp"
#include "surfgenus/fixtures.hpp"

using namespace surfgenus;
using Seq = std::vector<std::size_t>;

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

VertexMap identity_map(const TriangulatedSurface& s) {
  VertexMap m;
  for (auto v : s.vertex_ids()) m[v] = v;
  return m;
}

}  // namespace

TEST_CASE("family names") {
  CHECK(parse_family("flute") == Family::Flute);
  CHECK(parse_family("LOCH_NESS") == Family::LochNess);
  CHECK(parse_family("Genus-Tail") == Family::GenusTail);
  CHECK(parse_family("ladder") == Family::Ladder);
  CHECK_FALSE(parse_family("cantor").has_value());
  for (auto f : {Family::Flute, Family::Ladder, Family::LochNess, Family::GenusTail})
    CHECK(parse_family(family_name(f)) == f);
}

TEST_CASE("c1 sequences of the generated families") {
  CHECK(c1_sequence(generate_family(Family::Flute, 5)) == Seq{0, 0, 0, 0, 0});
  CHECK(c1_sequence(generate_family(Family::LochNess, 4)) == Seq{2, 4, 6, 8});
  CHECK(c1_sequence(generate_family(Family::GenusTail, 6, 2)) == Seq{2, 4, 4, 4, 4, 4});
  CHECK(c1_sequence(generate_family(Family::Ladder, 3)) == Seq{2, 4, 6});
  CHECK(c1_sequence(generate_family(Family::LochNess, 1)) == Seq{2});
}

TEST_CASE("generated steps have the advertised topology") {
  const auto flute = generate_family(Family::Flute, 4);
  for (std::size_t i = 0; i < flute.size(); ++i) CHECK(boundary_loops(flute.steps()[i]).size() == i + 1);

  const auto ladder_seq = generate_family(Family::Ladder, 3);
  for (const auto& s : ladder_seq.steps()) CHECK(boundary_loops(s).size() == 2);

  const auto loch = generate_family(Family::LochNess, 3);
  for (const auto& s : loch.steps()) CHECK(boundary_loops(s).size() == 1);

  // nested: each step has strictly more triangles
  for (const auto* e : {&flute, &ladder_seq, &loch})
    for (std::size_t i = 0; i + 1 < e->size(); ++i)
      CHECK(e->steps()[i].triangle_count() < e->steps()[i + 1].triangle_count());
}

TEST_CASE("generate_family: error paths") {
  CHECK(code_of([] { generate_family(Family::Flute, 0); }) == ErrorCode::BadParams);
  CHECK(code_of([] { generate_family(Family::GenusTail, 3, 4); }) == ErrorCode::BadParams);
}

TEST_CASE("classify") {
  const auto loch = classify(generate_family(Family::LochNess, 6), 3);
  CHECK(loch.status == StabilizationStatus::NotStabilized);
  CHECK(loch.genus_estimate == 6);
  CHECK(loch.c1_sequence == Seq{2, 4, 6, 8, 10, 12});
  CHECK(loch.complement_checks.empty());

  const auto tail = classify(generate_family(Family::GenusTail, 6, 2), 3);
  CHECK(tail.status == StabilizationStatus::Stabilized);
  CHECK(tail.genus_estimate == 2);
  CHECK(tail.plateau_start == 1);
  CHECK(tail.complements_planar());
  CHECK_FALSE(tail.complement_checks.empty());

  const auto flute = classify(generate_family(Family::Flute, 4), 4);
  CHECK(flute.status == StabilizationStatus::Stabilized);
  CHECK(flute.genus_estimate == 0);
  CHECK(flute.complements_planar());

  CHECK(describe(loch).find("NOT_STABILIZED") != std::string::npos);
  CHECK(describe(tail).find("from below") != std::string::npos);
}

TEST_CASE("classify: error paths") {
  const auto e = generate_family(Family::Flute, 3);
  CHECK(code_of([&] { classify(e, 1); }) == ErrorCode::BadParams);
  CHECK(code_of([&] { classify(e, 4); }) == ErrorCode::WindowTooLarge);
  CHECK(classify(e, 3).status == StabilizationStatus::Stabilized);
}

TEST_CASE("ExhaustionSequence validation") {
  const auto t = torus7();
  CHECK(code_of([] { ExhaustionSequence({}, {}); }) == ErrorCode::BadParams);
  CHECK(code_of([&] { ExhaustionSequence({t, t}, {}); }) == ErrorCode::BadInclusion);

  // non-injective map
  VertexMap collapse = identity_map(t);
  collapse[1] = 0;
  CHECK(code_of([&] { ExhaustionSequence({t, t}, {collapse}); }) == ErrorCode::BadInclusion);

  // {0,1,2} spans no triangle of the torus
  const auto disk = single_triangle();
  VertexMap into_torus{{0, 0}, {1, 1}, {2, 2}};
  CHECK(code_of([&] { ExhaustionSequence({disk, t}, {into_torus}); }) == ErrorCode::BadInclusion);

  // orientation-reversing image
  const auto first = t.triangles()[0];
  VertexMap reversed{{0, first[0]}, {1, first[2]}, {2, first[1]}};
  CHECK(code_of([&] { ExhaustionSequence({disk, t}, {reversed}); }) == ErrorCode::BadInclusion);
  VertexMap forward{{0, first[0]}, {1, first[1]}, {2, first[2]}};
  CHECK(ExhaustionSequence({disk, t}, {forward}).size() == 2);

  const auto split = build_surface(std::vector<Triangle>{{0, 1, 2}, {3, 4, 5}});
  CHECK(code_of([&] { ExhaustionSequence({split}, {}); }) == ErrorCode::NotConnected);
}

TEST_CASE("GENUS_TAIL stabilizes at its genus for every window") {
  for (std::size_t g = 0; g <= 3; ++g)
    for (std::size_t w = 2; w <= 4; ++w) {
      const auto v = classify(generate_family(Family::GenusTail, g + w, g), w);
      CHECK(v.status == StabilizationStatus::Stabilized);
      CHECK(v.genus_estimate == g);
      CHECK(v.complements_planar());
    }
}

TEST_CASE("random nested growth gives a non-decreasing c1 sequence") {
  std::mt19937 rng(31);
  const auto whole = surface_of_type(2, 1);
  for (int trial = 0; trial < 6; ++trial) {
    const auto chain = oracle::random_growth(whole, rng, 60);
    std::vector<std::vector<std::size_t>> keeps;
    for (std::size_t i = 0; i < chain.size(); i += 6) keeps.push_back(chain[i]);
    keeps.push_back(chain.back());
    const auto seq = c1_sequence(ExhaustionSequence::from_nested(whole, keeps));
    CHECK(std::is_sorted(seq.begin(), seq.end()));
    for (auto c : seq) {
      CHECK(c % 2 == 0);
      CHECK(c <= 4);
    }
  }
}

TEST_CASE("capping each step keeps c1 and gives a closed surface of genus c1/2") {
  const auto e = generate_family(Family::GenusTail, 5, 3);
  const auto seq = c1_sequence(e);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto r = invariant_report(cap_boundaries(e.steps()[i]));
    CHECK(r.ck[1] == seq[i]);
    CHECK(oracle::chi_genus_times_two(r.euler_characteristic, 0) == static_cast<std::int64_t>(seq[i]));
  }
}

TEST_CASE("extending a stabilized tail keeps the verdict") {
  for (std::size_t n = 5; n <= 8; ++n) {
    const auto v = classify(generate_family(Family::GenusTail, n, 2), 3);
    CHECK(v.status == StabilizationStatus::Stabilized);
    CHECK(v.genus_estimate == 2);
  }
  // the genus estimate never drops as steps are added
  std::size_t last = 0;
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto v = classify(generate_family(Family::LochNess, n), 3);
    CHECK(v.genus_estimate >= last);
    last = v.genus_estimate;
  }
}
