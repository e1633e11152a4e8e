#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "kplanar/geometry.hpp"

using namespace kplanar;

namespace {
Point pt(long long x, long long y) { return {Rational(x), Rational(y)}; }
Point pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }
Segment seg(Point a, Point b) { return {std::move(a), std::move(b)}; }
}  // namespace

TEST_CASE("segment intersection: symmetric X crossing") {
  auto r = segment_intersection(seg(pt(0, 0), pt(2, 2)), seg(pt(0, 2), pt(2, 0)));
  REQUIRE(r.kind == SegRelation::proper);
  CHECK(*r.point == pt(1, 1));
}

TEST_CASE("segment intersection: common endpoint") {
  auto r = segment_intersection(seg(pt(0, 0), pt(1, 0)), seg(pt(1, 0), pt(2, 1)));
  CHECK(r.kind == SegRelation::shared_endpoint);
  CHECK(*r.point == pt(1, 0));
}

TEST_CASE("segment intersection: collinear overlap") {
  auto r = segment_intersection(seg(pt(0, 0), pt(2, 0)), seg(pt(1, 0), pt(3, 0)));
  CHECK(r.kind == SegRelation::overlap);
}

TEST_CASE("segment intersection: collinear single touch is a shared endpoint") {
  auto r = segment_intersection(seg(pt(0, 0), pt(1, 0)), seg(pt(1, 0), pt(3, 0)));
  CHECK(r.kind == SegRelation::shared_endpoint);
  CHECK(*r.point == pt(1, 0));
}

TEST_CASE("segment intersection: endpoint touch (T junction)") {
  auto r = segment_intersection(seg(pt(0, 0), pt(2, 0)), seg(pt(1, 0), pt(1, 2)));
  CHECK(r.kind == SegRelation::endpoint_touch);
  CHECK(*r.point == pt(1, 0));
}

TEST_CASE("segment intersection: disjoint") {
  CHECK(segment_intersection(seg(pt(0, 0), pt(1, 1)), seg(pt(3, 0), pt(4, 1))).kind ==
        SegRelation::none);
  // near miss: would cross only on the extensions
  CHECK(segment_intersection(seg(pt(0, 0), pt(1, 1)), seg(pt(3, 0), pt(2, 1))).kind ==
        SegRelation::none);
}

TEST_CASE("symmetry of classification") {
  std::vector<std::pair<Segment, Segment>> cases = {
      {seg(pt(0, 0), pt(2, 2)), seg(pt(0, 2), pt(2, 0))},
      {seg(pt(0, 0), pt(1, 0)), seg(pt(1, 0), pt(2, 1))},
      {seg(pt(0, 0), pt(2, 0)), seg(pt(1, 0), pt(3, 0))},
      {seg(pt(0, 0), pt(2, 0)), seg(pt(1, 0), pt(1, 2))},
      {seg(pt(0, 0), pt(1, 1)), seg(pt(3, 0), pt(4, 1))},
  };
  for (const auto& [s, t] : cases) {
    auto a = segment_intersection(s, t);
    auto b = segment_intersection(t, s);
    CHECK(a.kind == b.kind);
    CHECK(a.point == b.point);
  }
}

TEST_CASE("proper crossing point satisfies both line equations") {
  // random-ish rational segments, checked by substitution
  Segment s = seg(pt(Rational(1, 3), Rational(0)), pt(Rational(5, 2), Rational(7, 3)));
  Segment t = seg(pt(Rational(0), Rational(2)), pt(Rational(3), Rational(1, 5)));
  auto r = segment_intersection(s, t);
  REQUIRE(r.kind == SegRelation::proper);
  const Point& p = *r.point;
  CHECK(orient(s.a, s.b, p) == 0);
  CHECK(orient(t.a, t.b, p) == 0);
  CHECK(point_in_segment_interior(p, s));
  CHECK(point_in_segment_interior(p, t));
}

TEST_CASE("cylinder metric canonicalization") {
  auto metric = make_cylinder(Rational(10));
  CHECK(metric.canonical_x(Rational(12)) == Rational(2));
  CHECK(metric.canonical_x(Rational(-3)) == Rational(7));
  CHECK(metric.canonical_x(Rational(10)) == Rational(0));
  CHECK(metric.canonical_x(Rational(19, 2)) == Rational(19, 2));
  CHECK_THROWS(make_cylinder(Rational(0)));
  CHECK_THROWS(make_cylinder(Rational(-1)));
}

TEST_CASE("lift_to_strip: seam-spanning segment splits in two") {
  auto metric = make_cylinder(Rational(10));
  auto pieces = lift_to_strip(seg(pt(Rational(19, 2), Rational(0)),
                                  pt(Rational(21, 2), Rational(1))),
                              metric);
  REQUIRE(pieces.size() == 2);
}

TEST_CASE("lift_to_strip: interior segment maps to itself") {
  auto metric = make_cylinder(Rational(10));
  Segment s = seg(pt(2, 3), pt(5, 4));
  auto pieces = lift_to_strip(s, metric);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].a == s.a);
  CHECK(pieces[0].b == s.b);
}

TEST_CASE("lift_to_strip matches 3x3 translate brute force for a seam crossing") {
  // two cylinder edges crossing once near the seam
  auto metric = make_cylinder(Rational(10));
  Segment e1 = seg(pt(Rational(19, 2), Rational(0)), pt(Rational(21, 2), Rational(2)));
  Segment e2 = seg(pt(Rational(19, 2), Rational(2)), pt(Rational(21, 2), Rational(0)));

  // brute force over all 9 translate pairs, deduplicated mod W
  std::set<Point> pts;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      Rational di = Rational(i) * *metric.width, dj = Rational(j) * *metric.width;
      Segment a = seg(pt(e1.a.x + di, e1.a.y), pt(e1.b.x + di, e1.b.y));
      Segment b = seg(pt(e2.a.x + dj, e2.a.y), pt(e2.b.x + dj, e2.b.y));
      auto r = segment_intersection(a, b);
      if (r.kind == SegRelation::proper) pts.insert(metric.canonical(*r.point));
    }
  CHECK(pts.size() == 1);
  CHECK(*pts.begin() == pt(0, 1));
}
