#include <catch2/catch_amalgamated.hpp>

#include "kplanar/constructions.hpp"
#include "kplanar/discharging.hpp"

using namespace kplanar;

namespace {

Point pt(long long x, long long y) { return {Rational(x), Rational(y)}; }

DrawnGraph triangle() {
  DrawnGraph d;
  d.add_vertex(pt(0, 0));
  d.add_vertex(pt(1, 0));
  d.add_vertex(pt(0, 1));
  d.add_edge(0, 1);
  d.add_edge(1, 2);
  d.add_edge(2, 0);
  return d;
}

DrawnGraph k4_crossed() {
  DrawnGraph d;
  d.add_vertex(pt(0, 0));
  d.add_vertex(pt(1, 0));
  d.add_vertex(pt(1, 1));
  d.add_vertex(pt(0, 1));
  for (int i = 0; i < 4; ++i) d.add_edge(i, (i + 1) % 4);
  d.add_edge(0, 2);
  d.add_edge(1, 3);
  return d;
}

// K3,3 drawn 2-plane and C3-free: hexagon plus three long chords, one bent
// to keep the crossings apart.
DrawnGraph k33_two_plane() {
  DrawnGraph d;
  d.add_vertex(pt(0, 0));
  d.add_vertex(pt(4, 0));
  d.add_vertex(pt(6, 3));
  d.add_vertex(pt(4, 6));
  d.add_vertex(pt(0, 6));
  d.add_vertex(pt(-2, 3));
  for (int i = 0; i < 6; ++i) d.add_edge(i, (i + 1) % 6);
  d.add_edge(0, 3, {{Rational(5, 2), Rational(14, 5)}});
  d.add_edge(2, 5);
  d.add_edge(1, 4);
  return d;
}

}  // namespace

TEST_CASE("remaining charges at alpha=4/5 match the triangle taxonomy") {
  // plane triangle: both faces are type-1 triangles with ch- = -2/5
  auto led = build_ledger(planarize(triangle()), Rational(4, 5));
  for (size_t f = 0; f < led.charge.size(); ++f) {
    CHECK(led.cls[f] == FaceClass::type1_triangle);
    CHECK(led.charge[f] == Rational(2));
    CHECK(led.remaining[f] == Rational(-2, 5));
  }

  // K4 with a crossing: four type-2 triangles (ch- = -3/5) and the outer
  // quad with all four original vertices (ch- = 4/5)
  auto led2 = build_ledger(planarize(k4_crossed()), Rational(4, 5));
  int type2 = 0, quad = 0;
  for (size_t f = 0; f < led2.charge.size(); ++f) {
    if (led2.cls[f] == FaceClass::type2_triangle) {
      ++type2;
      CHECK(led2.remaining[f] == Rational(-3, 5));
    } else {
      REQUIRE(led2.cls[f] == FaceClass::quad);
      ++quad;
      CHECK(led2.remaining[f] == Rational(4, 5));
    }
  }
  CHECK(type2 == 4);
  CHECK(quad == 1);
}

TEST_CASE("charge sum identity") {
  auto led = build_ledger(planarize(triangle()), Rational(1, 2));
  auto chk = charge_sum_check(led);
  CHECK(chk.lhs == Rational(4));
  CHECK(chk.pass);

  auto led2 = build_ledger(planarize(k4_crossed()), Rational(1, 2));
  auto chk2 = charge_sum_check(led2);
  CHECK(chk2.lhs == Rational(8));
  CHECK(chk2.pass);

  // wrapped generator instance
  auto [d, cert] = gen_c4free_1planar({Family::c4free_1planar, 8, 8, true});
  auto chk3 = charge_sum_check(build_ledger(planarize(d), Rational(4, 5)));
  CHECK(chk3.rhs == Rational(4 * cert.vertex_count - 8));
  CHECK(chk3.pass);
}

TEST_CASE("remaining charge is affine in alpha with slope -|V(f)|") {
  auto p = planarize(k4_crossed());
  auto l0 = build_ledger(p, Rational(0));
  auto lh = build_ledger(p, Rational(1, 2));
  auto l1 = build_ledger(p, Rational(1));
  for (size_t f = 0; f < p.faces.size(); ++f) {
    Rational v(p.faces[f].original_count);
    CHECK(l0.remaining[f] == l0.charge[f]);
    CHECK(lh.remaining[f] == l0.charge[f] - Rational(1, 2) * v);
    CHECK(l1.remaining[f] == l0.charge[f] - v);
  }
}

TEST_CASE("discharging feasibility on generator instances") {
  SECTION("C4-free 1-planar at alpha = 4/5") {
    auto [d, cert] = gen_c4free_1planar({Family::c4free_1planar, 8, 8, true});
    auto p = planarize(d);
    auto led = build_ledger(p, Rational(4, 5));
    auto res = discharge_feasibility(led);
    CHECK(res.feasible);
    // feasibility implies the density bound m <= (2/alpha)(n-2)
    CHECK(Rational(cert.edge_count) <=
          Rational(2) / led.alpha * Rational(cert.vertex_count - 2));
    // the witness plan leaves every face non-negative
    auto fin = apply_transfers(led, res.transfers);
    for (size_t f = 0; f < fin.size(); ++f)
      if (!p.faces[f].boundary) CHECK(fin[f].sign() >= 0);
  }

  SECTION("girth-5 1-planar at alpha = 5/6") {
    auto [d, cert] = gen_girth5_1planar({Family::girth5_1planar, 6, 3, true});
    auto led = build_ledger(planarize(d), Rational(5, 6));
    auto res = discharge_feasibility(led);
    CHECK(res.feasible);
    CHECK(Rational(cert.edge_count) <=
          Rational(2) / led.alpha * Rational(cert.vertex_count - 2));
  }

  SECTION("C4-free 1-planar at alpha = 0.95 is infeasible") {
    auto [d, cert] = gen_c4free_1planar({Family::c4free_1planar, 12, 8, true});
    auto led = build_ledger(planarize(d), Rational(95, 100));
    // the edge count already beats (2/alpha)(n-2), so no plan can exist
    CHECK(Rational(cert.edge_count) >
          Rational(2) / led.alpha * Rational(cert.vertex_count - 2));
    auto res = discharge_feasibility(led);
    CHECK(!res.feasible);
    CHECK(!res.unsatisfied.empty());
  }

  SECTION("C3-free 2-planar test drawing at alpha = 1/2") {
    auto d = k33_two_plane();
    CHECK(!has_c3(d.graph));
    CHECK(local_crossing_number(d) == 2);
    auto p = planarize(d);
    auto led = build_ledger(p, Rational(1, 2));
    // the central crossings-only triangle carries remaining charge -1
    bool saw_zero_vertex = false;
    for (size_t f = 0; f < led.cls.size(); ++f)
      if (led.cls[f] == FaceClass::zero_vertex_triangle) {
        saw_zero_vertex = true;
        CHECK(led.remaining[f] == Rational(-1));
      }
    CHECK(saw_zero_vertex);
    auto res = discharge_feasibility(led);
    CHECK(res.feasible);
  }
}

TEST_CASE("density formula") {
  SECTION("plane triangulation: equality at t = 3") {
    // octahedron-like triangulation: a triangulated hexagon with center
    DrawnGraph d;
    d.add_vertex(pt(0, 0));
    d.add_vertex(pt(4, 0));
    d.add_vertex(pt(2, 4));
    d.add_vertex(pt(2, 1));  // center
    d.add_edge(0, 1);
    d.add_edge(1, 2);
    d.add_edge(2, 0);
    d.add_edge(0, 3);
    d.add_edge(1, 3);
    d.add_edge(2, 3);
    auto rep = density_formula_check(planarize(d), 3);
    CHECK(rep.pass);
    CHECK(rep.rhs == Rational(3 * (4 - 2)));
    CHECK(rep.m == 6);  // equality: m = 3(n-2)
  }

  SECTION("K4 with one crossing, t = 3") {
    auto rep = density_formula_check(planarize(k4_crossed()), 3);
    CHECK(rep.pass);
    CHECK(rep.crossings == 1);
  }

  SECTION("C3-free 1-plane input: C5-cell credit and the 3(n-2) bound") {
    auto [d, cert] = gen_girth5_1planar({Family::girth5_1planar, 4, 3, true});
    auto p = planarize(d);
    auto rep = density_formula_check(p, 3);
    CHECK(rep.pass);
    CHECK(rep.c5_credit_holds);
    CHECK(Rational(rep.m) <= Rational(3 * (cert.vertex_count - 2)));
  }
}
