#pragma once

#include <functional>
#include <map>
#include <optional>

#include "kplanar/drawing.hpp"

namespace kplanar {

enum class Family {
  c4free_1planar,
  girth5_1planar,
  c4free_2planar,
  girth5_2planar,
  girth5_3planar,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::c4free_1planar: return "c4free-1planar";
    case Family::girth5_1planar: return "girth5-1planar";
    case Family::c4free_2planar: return "c4free-2planar";
    case Family::girth5_2planar: return "girth5-2planar";
    case Family::girth5_3planar: return "girth5-3planar";
  }
  return "?";
}

inline std::optional<Family> parse_family(const std::string& s) {
  for (Family f : {Family::c4free_1planar, Family::girth5_1planar,
                   Family::c4free_2planar, Family::girth5_2planar,
                   Family::girth5_3planar})
    if (s == family_name(f)) return f;
  return std::nullopt;
}

struct ConstructionSpec {
  Family family = Family::c4free_1planar;
  int rows = 0, cols = 0;
  bool wrap = false;
};

struct InvalidSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConstructionCertificate {
  int expected_k = 0;
  std::optional<int> expected_girth_min;
  bool expects_c3_free = false;
  bool expects_c4_free = false;
  long long vertex_count = 0;
  long long edge_count = 0;
  Rational asymptotic_density;
  Rational boundary_deficit;  // density*n - m, the finite-size edge shortfall
};

namespace detail {

// Adds an edge whose path was computed in the u -> v orientation; flips it
// when the graph stores the edge the other way around.
inline int add_path_edge(DrawnGraph& d, int u, int v, std::vector<Point> path) {
  if (u > v) {
    std::swap(u, v);
    std::reverse(path.begin(), path.end());
  }
  int id = d.graph.add_edge(u, v);
  d.edge_paths.push_back(std::move(path));
  return id;
}

inline Rational frac(long long num, long long den) { return Rational(num, den); }

}  // namespace detail

// ---------------------------------------------------------------------------
// C4-free 1-planar, density -> 12/5. Black vertices on the integer grid, red
// vertices at the centers of every (odd, odd) unit square joined to its four
// corners; all other unit squares carry both diagonals; one extra axis edge
// per black vertex picked by the j mod 4 pattern.
// ---------------------------------------------------------------------------
inline std::pair<DrawnGraph, ConstructionCertificate> gen_c4free_1planar(
    const ConstructionSpec& spec) {
  const int R = spec.rows, C = spec.cols;
  if (R < 4 || C < 4)
    throw InvalidSpec("c4free-1planar: rows and cols must be at least 4");
  if (spec.wrap && C % 4 != 0)
    throw InvalidSpec("c4free-1planar: wrapped cols must be divisible by 4");

  DrawnGraph d;
  if (spec.wrap) d.metric = make_cylinder(Rational(C));

  auto xrep = [&](int x) { return Rational(x); };  // representative (may be C)
  std::map<std::pair<int, int>, int> black;
  for (int j = 0; j < R; ++j)
    for (int i = 0; i < C; ++i)
      black[{i, j}] = d.add_vertex({Rational(i), Rational(j)}, "black");
  auto bv = [&](int i, int j) -> int {
    int ii = i;
    if (spec.wrap) ii = ((i % C) + C) % C;
    auto it = black.find({ii, j});
    return it == black.end() ? -1 : it->second;
  };

  const Rational half(1, 2);
  auto seg_edge = [&](int u, int v, Point pu, Point pv) {
    detail::add_path_edge(d, u, v, {pu, pv});
  };

  // squares with lower-left corner (i, j)
  const int imax = spec.wrap ? C : C - 1;
  for (int j = 0; j + 1 < R; ++j) {
    for (int i = 0; i < imax; ++i) {
      int v00 = bv(i, j), v10 = bv(i + 1, j);
      int v11 = bv(i + 1, j + 1), v01 = bv(i, j + 1);
      Point p00{xrep(i), Rational(j)}, p10{xrep(i + 1), Rational(j)};
      Point p11{xrep(i + 1), Rational(j + 1)}, p01{xrep(i), Rational(j + 1)};
      if (i % 2 == 1 && j % 2 == 1) {
        // red square: subdivided crossing
        int r = d.add_vertex(
            {d.metric.canonical_x(Rational(i) + half), Rational(j) + half},
            "red");
        Point pr{Rational(i) + half, Rational(j) + half};
        const std::pair<int, Point> corners[4] = {
            {v00, p00}, {v10, p10}, {v11, p11}, {v01, p01}};
        for (const auto& [v, pv] : corners)
          detail::add_path_edge(d, r, v, {pr, pv});
      } else {
        seg_edge(v00, v11, p00, p11);
        seg_edge(v10, v01, p10, p01);
      }
    }
  }

  // One extra axis-aligned edge per black vertex, on a 4x4-periodic pattern.
  // Horizontal runs start at odd columns and stack only across subdivided
  // squares; vertical runs start at odd rows and flank only subdivided
  // squares. Any other placement closes a 4-cycle with the diagonals.
  for (int j = 0; j < R; ++j) {
    const int hstart = (j % 4 == 1 || j % 4 == 2) ? 1 : 3;
    for (int i = hstart; i < C; i += 4) {
      if (!spec.wrap && i + 1 >= C) continue;
      seg_edge(bv(i, j), bv(i + 1, j), {xrep(i), Rational(j)},
               {xrep(i + 1), Rational(j)});
    }
  }
  for (int j = 1; j + 1 < R; j += 2) {
    const int vstart = (j % 4 == 1) ? 3 : 1;  // flanked square stays subdivided
    for (int i = vstart; i < C; i += 4) {
      seg_edge(bv(i, j), bv(i, j + 1), {xrep(i), Rational(j)},
               {xrep(i), Rational(j + 1)});
      if (spec.wrap || i + 1 < C)
        seg_edge(bv(i + 1, j), bv(i + 1, j + 1), {xrep(i + 1), Rational(j)},
                 {xrep(i + 1), Rational(j + 1)});
    }
  }

  ConstructionCertificate cert;
  cert.expected_k = 1;
  cert.expects_c4_free = true;
  cert.asymptotic_density = detail::frac(12, 5);
  cert.vertex_count = d.graph.n;
  cert.edge_count = d.graph.m();
  cert.boundary_deficit =
      cert.asymptotic_density * Rational(cert.vertex_count) - Rational(cert.edge_count);
  return {std::move(d), cert};
}

// ---------------------------------------------------------------------------
// C4-free 2-planar, density -> 5/2. Brick-wall honeycomb of hexagonal cells;
// the grid itself carries no edges, each cell gets the five chords 14, 24,
// 35, 36, 56 (corners numbered anticlockwise from the lower-left).
// ---------------------------------------------------------------------------
inline std::pair<DrawnGraph, ConstructionCertificate> gen_c4free_2planar(
    const ConstructionSpec& spec) {
  const int R = spec.rows, C = spec.cols;
  if (R < 3 || C < 3)
    throw InvalidSpec("c4free-2planar: rows and cols must be at least 3");

  DrawnGraph d;
  const int W = 2 * C;
  if (spec.wrap) d.metric = make_cylinder(Rational(W));

  std::map<std::pair<int, int>, int> vid;
  const int xmax = spec.wrap ? W : W + 1;
  for (int y = 0; y <= R; ++y)
    for (int x = 0; x < xmax; ++x)
      vid[{x, y}] = d.add_vertex({Rational(x), Rational(y)},
                                 (x + y) % 2 == 0 ? "blue" : "red");
  auto vat = [&](int x, int y) -> int {
    if (spec.wrap) x = ((x % W) + W) % W;
    auto it = vid.find({x, y});
    return it == vid.end() ? -1 : it->second;
  };

  long long cells = 0;
  for (int q = 0; q < R; ++q) {
    const int pmax = spec.wrap ? C : (q % 2 == 0 ? C : C - 1);
    for (int p = 0; p < pmax; ++p) {
      const int X = 2 * p + (q % 2);
      int h[6] = {vat(X, q),     vat(X + 1, q),     vat(X + 2, q),
                  vat(X + 2, q + 1), vat(X + 1, q + 1), vat(X, q + 1)};
      bool ok = true;
      for (int v : h) ok = ok && v >= 0;
      if (!ok) continue;
      ++cells;
      Point P[6] = {{Rational(X), Rational(q)},
                    {Rational(X + 1), Rational(q)},
                    {Rational(X + 2), Rational(q)},
                    {Rational(X + 2), Rational(q + 1)},
                    {Rational(X + 1), Rational(q + 1)},
                    {Rational(X), Rational(q + 1)}};
      const int chords[5][2] = {{0, 3}, {1, 3}, {2, 4}, {2, 5}, {4, 5}};
      for (auto [s, t] : chords)
        detail::add_path_edge(d, h[s], h[t], {P[s], P[t]});
    }
  }

  ConstructionCertificate cert;
  cert.expected_k = 2;
  cert.expects_c4_free = true;
  cert.asymptotic_density = detail::frac(5, 2);
  cert.vertex_count = d.graph.n;
  cert.edge_count = d.graph.m();
  cert.boundary_deficit =
      cert.asymptotic_density * Rational(cert.vertex_count) - Rational(cert.edge_count);
  (void)cells;
  return {std::move(d), cert};
}

// ---------------------------------------------------------------------------
// Girth-5 3-planar, density -> 5/2. Vertices on the integer grid, red where
// i and j share parity (degree 4), black otherwise (degree 6). Edges: all
// vertical unit edges; black (i,j) to (i+2, j+1) and to (i+1, j+3); one
// horizontal edge from each red vertex to (i+1, j).
// ---------------------------------------------------------------------------
inline std::pair<DrawnGraph, ConstructionCertificate> gen_girth5_3planar(
    const ConstructionSpec& spec) {
  const int R = spec.rows, C = spec.cols;
  if (R < 8 || C < 6)
    throw InvalidSpec("girth5-3planar: need rows >= 8 and cols >= 6");
  if (spec.wrap && C % 2 != 0)
    throw InvalidSpec("girth5-3planar: wrapped cols must be even");

  DrawnGraph d;
  if (spec.wrap) d.metric = make_cylinder(Rational(C));

  std::map<std::pair<int, int>, int> vid;
  for (int j = 0; j < R; ++j)
    for (int i = 0; i < C; ++i)
      vid[{i, j}] = d.add_vertex({Rational(i), Rational(j)},
                                 (i + j) % 2 == 0 ? "red" : "black");
  auto vat = [&](int i, int j) -> int {
    if (j < 0 || j >= R) return -1;
    if (spec.wrap) i = ((i % C) + C) % C;
    else if (i < 0 || i >= C) return -1;
    auto it = vid.find({i, j});
    return it == vid.end() ? -1 : it->second;
  };
  auto link = [&](int i0, int j0, int i1, int j1) {
    int u = vat(i0, j0), v = vat(i1, j1);
    if (u < 0 || v < 0) return;
    detail::add_path_edge(d, u, v,
                          {{Rational(i0), Rational(j0)}, {Rational(i1), Rational(j1)}});
  };

  for (int j = 0; j < R; ++j) {
    for (int i = 0; i < C; ++i) {
      link(i, j, i, j + 1);  // vertical
      if ((i + j) % 2 == 1) {
        link(i, j, i + 2, j + 1);  // black -> red, slope 1/2
        link(i, j, i + 1, j + 3);  // black -> black, slope 3
      } else {
        link(i, j, i + 1, j);  // red -> black, horizontal
      }
    }
  }

  ConstructionCertificate cert;
  cert.expected_k = 3;
  cert.expected_girth_min = 5;
  cert.expects_c3_free = true;
  cert.expects_c4_free = true;
  cert.asymptotic_density = detail::frac(5, 2);
  cert.vertex_count = d.graph.n;
  cert.edge_count = d.graph.m();
  cert.boundary_deficit =
      cert.asymptotic_density * Rational(cert.vertex_count) - Rational(cert.edge_count);
  return {std::move(d), cert};
}

// ---------------------------------------------------------------------------
// Girth-5 1-planar, density -> 13/6. Brick-wall honeycomb where every cell
// carries a fixed "pinwheel" of three mutually crossing corner-to-corner
// paths (bent at the interior vertices a, b, c) plus a hub d, making each
// cell plus its boundary a 1-plane Petersen graph. One extra inter-cell
// edge per cell (the "red" links a-a upward-left, c-c downward-left) keeps
// every cell at exactly two link endpoints. Odd rows use the mirrored
// template so the link corridors line up.
// ---------------------------------------------------------------------------
namespace detail {

struct BrickTemplate {
  // local coordinates inside [0,2]x[0,1]
  Point a, b, c, d;
};

inline const BrickTemplate& brick_template(bool mirrored) {
  static const BrickTemplate plain{
      {Rational(7, 8), Rational(9, 16)},
      {Rational(17, 16), Rational(3, 8)},
      {Rational(5, 8), Rational(5, 16)},
      {Rational(27, 32), Rational(13, 32)},
  };
  static const BrickTemplate mirror{
      {Rational(11, 8), Rational(5, 16)},
      {Rational(15, 16), Rational(3, 8)},
      {Rational(9, 8), Rational(9, 16)},
      {Rational(37, 32), Rational(13, 32)},
  };
  return mirrored ? mirror : plain;
}

}  // namespace detail

namespace detail {

struct BrickInterior {
  int a = -1, b = -1, c = -1, dd = -1;
};

struct HoneycombBase {
  DrawnGraph d;
  std::map<std::pair<int, int>, BrickInterior> interior;
};

}  // namespace detail

// Shared base of the two girth-5 honeycomb families: the Petersen-tiled
// brick wall plus the inter-tile red links.
inline detail::HoneycombBase build_petersen_honeycomb(const ConstructionSpec& spec,
                                                      const char* what) {
  const int R = spec.rows, C = spec.cols;
  if (R < 3 || C < 3)
    throw InvalidSpec(std::string(what) + ": rows and cols must be at least 3");
  if (spec.wrap && C % 3 != 0)
    throw InvalidSpec(std::string(what) + ": wrapped cols must be divisible by 3");

  detail::HoneycombBase base;
  DrawnGraph& d = base.d;
  const int W = 2 * C;
  if (spec.wrap) d.metric = make_cylinder(Rational(W));

  // honeycomb lattice
  std::map<std::pair<int, int>, int> vid;
  const int xmax = spec.wrap ? W : W + 1;
  for (int y = 0; y <= R; ++y)
    for (int x = 0; x < xmax; ++x)
      vid[{x, y}] = d.add_vertex({Rational(x), Rational(y)}, "black");
  auto vat = [&](int x, int y) -> int {
    if (y < 0 || y > R) return -1;
    if (spec.wrap) x = ((x % W) + W) % W;
    else if (x < 0 || x > W) return -1;
    auto it = vid.find({x, y});
    return it == vid.end() ? -1 : it->second;
  };
  for (int y = 0; y <= R; ++y)
    for (int x = 0; x < xmax; ++x) {
      if (vat(x + 1, y) >= 0)
        detail::add_path_edge(d, vat(x, y), vat(x + 1, y),
                              {{Rational(x), Rational(y)}, {Rational(x + 1), Rational(y)}});
      if ((x + y) % 2 == 0 && vat(x, y + 1) >= 0)
        detail::add_path_edge(d, vat(x, y), vat(x, y + 1),
                              {{Rational(x), Rational(y)}, {Rational(x), Rational(y + 1)}});
    }

  // per-brick interior: vertices a, b, c, d and the nine pattern edges
  using Interior = detail::BrickInterior;
  auto& interior = base.interior;
  auto brick_x = [&](int p, int q) { return 2 * p + (q % 2); };

  for (int q = 0; q < R; ++q) {
    const int pmax = spec.wrap ? C : (q % 2 == 0 ? C : C - 1);
    for (int p = 0; p < pmax; ++p) {
      const int X = brick_x(p, q);
      int h[6] = {vat(X, q),         vat(X + 1, q),     vat(X + 2, q),
                  vat(X + 2, q + 1), vat(X + 1, q + 1), vat(X, q + 1)};
      bool ok = true;
      for (int v : h) ok = ok && v >= 0;
      if (!ok) continue;
      const auto& tp = detail::brick_template(q % 2 == 1);
      auto place = [&](const Point& local, const char* label) {
        Point rep{Rational(X) + local.x, Rational(q) + local.y};
        return d.add_vertex(d.metric.canonical(rep), label);
      };
      Interior in;
      in.a = place(tp.a, "black");
      in.b = place(tp.b, "black");
      in.c = place(tp.c, "black");
      in.dd = place(tp.d, "black");
      interior[{p, q}] = in;

      auto lp = [&](const Point& local) {
        return Point{Rational(X) + local.x, Rational(q) + local.y};
      };
      Point P[6] = {{Rational(X), Rational(q)},
                    {Rational(X + 1), Rational(q)},
                    {Rational(X + 2), Rational(q)},
                    {Rational(X + 2), Rational(q + 1)},
                    {Rational(X + 1), Rational(q + 1)},
                    {Rational(X), Rational(q + 1)}};
      detail::add_path_edge(d, h[0], in.a, {P[0], lp(tp.a)});
      detail::add_path_edge(d, in.a, h[3], {lp(tp.a), P[3]});
      detail::add_path_edge(d, h[1], in.b, {P[1], lp(tp.b)});
      detail::add_path_edge(d, in.b, h[4], {lp(tp.b), P[4]});
      detail::add_path_edge(d, h[2], in.c, {P[2], lp(tp.c)});
      detail::add_path_edge(d, in.c, h[5], {lp(tp.c), P[5]});
      detail::add_path_edge(d, in.dd, in.a, {lp(tp.d), lp(tp.a)});
      detail::add_path_edge(d, in.dd, in.b, {lp(tp.d), lp(tp.b)});
      detail::add_path_edge(d, in.dd, in.c, {lp(tp.d), lp(tp.c)});
    }
  }

  // red links, generated from even rows: a(p,q)-a(UL) and c(p,q)-c(DL)
  auto brick_at = [&](int p, int q) -> const Interior* {
    if (spec.wrap) p = ((p % C) + C) % C;
    auto it = interior.find({p, q});
    return it == interior.end() ? nullptr : &it->second;
  };
  for (int q = 0; q < R; q += 2) {
    for (int p = 0; p < C; ++p) {
      const Interior* t = brick_at(p, q);
      if (!t) continue;
      const int X = brick_x(p, q);
      const auto& tp = detail::brick_template(false);
      if (const Interior* ul = brick_at(p - 1, q + 1)) {
        // a(T) at (X+7/8, q+9/16) -> a'(UL) representative (X+3/8, q+21/16)
        detail::add_path_edge(d, t->a, ul->a,
                              {{Rational(X) + tp.a.x, Rational(q) + tp.a.y},
                               {Rational(X) + Rational(3, 8), Rational(q) + Rational(21, 16)}});
      }
      if (const Interior* dl = brick_at(p - 1, q - 1)) {
        // c(T) at (X+5/8, q+5/16) -> c'(DL) representative (X+1/8, q-7/16)
        detail::add_path_edge(d, t->c, dl->c,
                              {{Rational(X) + tp.c.x, Rational(q) + tp.c.y},
                               {Rational(X) + Rational(1, 8), Rational(q) - Rational(7, 16)}});
      }
    }
  }
  return base;
}

inline std::pair<DrawnGraph, ConstructionCertificate> gen_girth5_1planar(
    const ConstructionSpec& spec) {
  auto base = build_petersen_honeycomb(spec, "girth5-1planar");
  ConstructionCertificate cert;
  cert.expected_k = 1;
  cert.expected_girth_min = 5;
  cert.expects_c3_free = true;
  cert.expects_c4_free = true;
  cert.asymptotic_density = detail::frac(13, 6);
  cert.vertex_count = base.d.graph.n;
  cert.edge_count = base.d.graph.m();
  cert.boundary_deficit = cert.asymptotic_density * Rational(cert.vertex_count) -
                          Rational(cert.edge_count);
  return {std::move(base.d), cert};
}

// ---------------------------------------------------------------------------
// Girth-5 2-planar, density -> 16/7. The Petersen honeycomb plus one blue
// vertex per hexagon (three per hexagon triple) with three edges each:
// to the cell's own middle-chord vertex b and to the matching interior
// vertices of the two cells below. Blue edges take at most two crossings,
// raising the affected pinwheel chords and boundary edges to exactly two.
// ---------------------------------------------------------------------------
inline std::pair<DrawnGraph, ConstructionCertificate> gen_girth5_2planar(
    const ConstructionSpec& spec) {
  auto base = build_petersen_honeycomb(spec, "girth5-2planar");
  DrawnGraph& d = base.d;
  const int R = spec.rows, C = spec.cols;

  auto brick_at = [&](int p, int q) -> const detail::BrickInterior* {
    if (spec.wrap) p = ((p % C) + C) % C;
    auto it = base.interior.find({p, q});
    return it == base.interior.end() ? nullptr : &it->second;
  };

  for (int q = 0; q < R; ++q) {
    for (int p = 0; p < C; ++p) {
      const detail::BrickInterior* t = brick_at(p, q);
      if (!t) continue;
      const Rational X(2 * p + (q % 2));
      const Rational Q(q);
      auto at = [&](long long xn, long long xd, long long yn, long long yd) {
        return Point{X + Rational(xn, xd), Q + Rational(yn, yd)};
      };
      if (q % 2 == 0) {
        // plain template: blue sits in the lower-right pocket
        int v = d.add_vertex(d.metric.canonical(at(5, 4, 1, 16)), "blue");
        detail::add_path_edge(d, v, t->b, {at(5, 4, 1, 16), at(17, 16, 3, 8)});
        if (const auto* dr = brick_at(p, q - 1)) {
          detail::add_path_edge(d, v, dr->b,
                                {at(5, 4, 1, 16), at(31, 16, -5, 8)});
        }
        if (const auto* dl = brick_at(p - 1, q - 1)) {
          detail::add_path_edge(
              d, v, dl->c,
              {at(5, 4, 1, 16), at(9, 16, 1, 8), at(1, 8, -7, 16)});
        }
      } else {
        // mirrored template
        int v = d.add_vertex(d.metric.canonical(at(3, 4, 1, 16)), "blue");
        detail::add_path_edge(d, v, t->b, {at(3, 4, 1, 16), at(15, 16, 3, 8)});
        if (const auto* dl = brick_at(p, q - 1)) {
          detail::add_path_edge(d, v, dl->b,
                                {at(3, 4, 1, 16), at(1, 16, -5, 8)});
        }
        if (const auto* dr = brick_at(p + 1, q - 1)) {
          detail::add_path_edge(
              d, v, dr->a,
              {at(3, 4, 1, 16), at(23, 16, 1, 8), at(15, 8, -7, 16)});
        }
      }
    }
  }

  ConstructionCertificate cert;
  cert.expected_k = 2;
  cert.expected_girth_min = 5;
  cert.expects_c3_free = true;
  cert.expects_c4_free = true;
  cert.asymptotic_density = detail::frac(16, 7);
  cert.vertex_count = d.graph.n;
  cert.edge_count = d.graph.m();
  cert.boundary_deficit = cert.asymptotic_density * Rational(cert.vertex_count) -
                          Rational(cert.edge_count);
  return {std::move(d), cert};
}

inline std::pair<DrawnGraph, ConstructionCertificate> generate(
    const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::c4free_1planar: return gen_c4free_1planar(spec);
    case Family::girth5_1planar: return gen_girth5_1planar(spec);
    case Family::c4free_2planar: return gen_c4free_2planar(spec);
    case Family::girth5_2planar: return gen_girth5_2planar(spec);
    case Family::girth5_3planar: return gen_girth5_3planar(spec);
  }
  throw InvalidSpec("unknown family");
}

}  // namespace kplanar
