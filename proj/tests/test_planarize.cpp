#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "kplanar/planarize.hpp"

using namespace kplanar;

namespace {
Point pt(long long x, long long y) { return {Rational(x), Rational(y)}; }
}  // namespace

TEST_CASE("plane triangle: two faces, both of size 3 with 3 original vertices") {
  DrawnGraph d;
  d.add_vertex(pt(0, 0));
  d.add_vertex(pt(1, 0));
  d.add_vertex(pt(0, 1));
  d.add_edge(0, 1);
  d.add_edge(1, 2);
  d.add_edge(2, 0);
  auto p = planarize(d);
  REQUIRE(p.faces.size() == 2);
  for (const auto& f : p.faces) {
    CHECK(f.size == 3);
    CHECK(f.original_count == 3);
    CHECK(!f.boundary);
  }
  CHECK(charge_total(p) == Rational(4));  // 4n-8 with n=3
}

TEST_CASE("K4 with one crossing: V'=5, E'=8, F'=5, dummy degree 4") {
  DrawnGraph d;
  d.add_vertex(pt(0, 0));
  d.add_vertex(pt(1, 0));
  d.add_vertex(pt(1, 1));
  d.add_vertex(pt(0, 1));
  for (int i = 0; i < 4; ++i) d.add_edge(i, (i + 1) % 4);
  d.add_edge(0, 2);
  d.add_edge(1, 3);
  auto p = planarize(d);
  CHECK(p.plane_graph.n == 5);
  CHECK(p.plane_graph.m() == 8);
  CHECK(p.faces.size() == 5);
  CHECK(p.rotation[4].size() == 4);
  CHECK(p.origin[4] == 0);
  CHECK(charge_total(p) == Rational(8));  // 4*4-8
  CHECK(p.local_crossing_number() == 1);
}

TEST_CASE("hexagonal cell of the C4-free 2-planar pattern: face census") {
  // Hexagon boundary (the 5-6 side doubles as the 56 chord) plus chords
  // 14, 24, 35, 36. Census below was traced by hand.
  DrawnGraph d;
  d.add_vertex(pt(0, 0));  // 1
  d.add_vertex(pt(1, 0));  // 2
  d.add_vertex(pt(2, 0));  // 3
  d.add_vertex(pt(2, 1));  // 4
  d.add_vertex(pt(1, 1));  // 5
  d.add_vertex(pt(0, 1));  // 6
  for (int i = 0; i < 6; ++i) d.add_edge(i, (i + 1) % 6);
  d.add_edge(0, 3);
  d.add_edge(1, 3);
  d.add_edge(2, 4);
  d.add_edge(2, 5);

  auto p = planarize(d);
  CHECK(p.plane_graph.n == 10);
  CHECK(p.plane_graph.m() == 18);
  REQUIRE(p.faces.size() == 10);

  std::multiset<std::pair<int, int>> census;
  for (const auto& f : p.faces) census.insert({f.size, f.original_count});
  std::multiset<std::pair<int, int>> expected = {
      {4, 2}, {3, 2}, {3, 2}, {4, 0}, {3, 1},
      {3, 2}, {4, 2}, {3, 2}, {3, 1}, {6, 6}};
  CHECK(census == expected);
  CHECK(charge_total(p) == Rational(16));  // 4*6-8

  // double counting: sum of |f| and of segment counts both equal 2|E'|
  long long size_sum = 0, seg_sum = 0;
  for (const auto& f : p.faces) {
    size_sum += f.size;
    seg_sum += f.segment_count;
  }
  CHECK(size_sum == 2 * p.plane_graph.m());
  CHECK(seg_sum == 2 * p.plane_graph.m());
}

TEST_CASE("wrapped cycle on a cylinder: two cap faces, Euler holds") {
  const int w = 6;
  DrawnGraph d;
  d.metric = make_cylinder(Rational(w));
  for (int i = 0; i < w; ++i) d.add_vertex(pt(i, 0));
  for (int i = 0; i + 1 < w; ++i) d.add_edge(i, i + 1);
  // seam edge drawn with the universal-cover representative (front must be
  // a representative of vertex 0, the smaller endpoint)
  d.graph.add_edge(0, w - 1);
  d.edge_paths.push_back({pt(w, 0), pt(w - 1, 0)});

  auto p = planarize(d);
  CHECK(p.plane_graph.n == w);
  CHECK(p.plane_graph.m() == w);
  REQUIRE(p.faces.size() == 2);
  for (const auto& f : p.faces) {
    CHECK(f.boundary);
    CHECK(f.size == w);
    CHECK(f.original_count == w);
  }
  CHECK(charge_total(p) == Rational(4 * w - 8));
}

TEST_CASE("bridges: walk counts incidences with multiplicity") {
  DrawnGraph d;
  d.add_vertex(pt(0, 0));
  d.add_vertex(pt(1, 0));
  d.add_vertex(pt(2, 1));
  d.add_edge(0, 1);
  d.add_edge(1, 2);
  auto p = planarize(d);
  REQUIRE(p.faces.size() == 1);
  CHECK(p.faces[0].size == 4);            // each bridge walked twice
  CHECK(p.faces[0].original_count == 4);  // middle vertex counted twice
  CHECK(!p.biconnected_input);
  CHECK(charge_total(p) == Rational(4));  // 4*3-8
}

TEST_CASE("disconnected drawings are rejected") {
  DrawnGraph d;
  d.add_vertex(pt(0, 0));
  d.add_vertex(pt(1, 0));
  d.add_vertex(pt(5, 5));
  d.add_edge(0, 1);
  CHECK_THROWS_AS(planarize(d), DrawingError);
}
