#pragma once

#include <array>
#include <numeric>

#include "kplanar/drawing.hpp"

namespace kplanar {

// A face of the planarization. Counts are boundary-walk incidences with
// multiplicity, so cut vertices and bridges are handled uniformly.
struct Face {
  std::vector<int> vertex_walk;  // V' id at the tail of each walk dart
  int size = 0;                  // |f|: V'-incidences on the walk
  int original_count = 0;        // |V(f)|: incidences at original vertices
  int segment_count = 0;         // edge segments on the walk (= size)
  long long cell_size = 0;       // ||c||: original_count + segment_count
  int winding = 0;               // x-period winding; nonzero only on cylinders
  bool boundary = false;         // cylinder cap face
};

// Plane (or cylinder, completed to the sphere) graph obtained by replacing
// each crossing with a degree-4 dummy vertex.
struct Planarization {
  Graph plane_graph;  // V' and E'; may contain parallel edges
  int original_n = 0;
  int original_m = 0;
  std::vector<int> origin;            // per V' vertex: -1 original, else crossing id
  std::vector<Point> positions;       // canonical V' positions
  std::vector<Crossing> crossings;
  std::vector<int> prime_source;      // per E' edge: originating edge id
  std::vector<std::array<int, 2>> prime_faces;  // the two faces along each E' edge
  std::vector<std::vector<int>> rotation;       // cyclic dart order per V' vertex
  std::vector<Face> faces;
  bool biconnected_input = true;
  bool on_cylinder = false;

  int dummy_count() const { return (int)crossings.size(); }
  int num_faces() const { return (int)faces.size(); }
  // Max crossings on any single original edge (the drawing's local crossing number).
  int local_crossing_number() const {
    std::vector<int> cnt(original_m, 0);
    for (const auto& c : crossings) {
      ++cnt[c.edge_a];
      ++cnt[c.edge_b];
    }
    return cnt.empty() ? 0 : *std::max_element(cnt.begin(), cnt.end());
  }
};

namespace detail {

struct Portion {
  int src_edge = 0;
  int from = 0, to = 0;       // V' ids
  Point from_pt, to_pt;       // local (lifted) coordinates
  Point dir_from, dir_to;     // outgoing direction at each end
  Rational dx;                // lifted x displacement from -> to
};

// CCW angular order: upper half plane first, then by cross product.
inline bool dir_less(const Point& a, const Point& b) {
  auto half = [](const Point& d) {
    if (d.y > Rational(0)) return 0;
    if (d.y < Rational(0)) return 1;
    return d.x > Rational(0) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  const Rational cross = a.x * b.y - a.y * b.x;
  if (cross.is_zero())
    throw DrawingError("degenerate_rotation",
                       "two darts leave a vertex in the same direction");
  return cross > Rational(0);
}

}  // namespace detail

inline Planarization planarize(const DrawnGraph& d) {
  if (!d.graph.connected())
    throw DrawingError("disconnected", "drawing must be connected");

  CrossingSet cs = compute_crossing_set(d);
  Planarization p;
  p.original_n = d.graph.n;
  p.original_m = d.graph.m();
  p.crossings = cs.crossings;
  p.on_cylinder = d.metric.on_cylinder();
  p.biconnected_input = is_biconnected(d.graph);

  const int n = d.graph.n;
  const int np = n + (int)cs.crossings.size();
  p.origin.assign(np, -1);
  p.positions.resize(np);
  for (int v = 0; v < n; ++v) p.positions[v] = d.metric.canonical(d.positions[v]);
  for (size_t i = 0; i < cs.crossings.size(); ++i) {
    p.origin[n + i] = (int)i;
    p.positions[n + i] = cs.crossings[i].point;
  }

  // Split every edge at its crossings, in edge-local order.
  std::vector<detail::Portion> portions;
  for (int e = 0; e < d.graph.m(); ++e) {
    const auto& path = d.edge_paths[e];
    struct Ev {
      int piece;
      Rational t;
      int node;
    };
    std::vector<Ev> evs;
    for (int ci : cs.per_edge[e]) {
      const auto& cr = cs.crossings[ci];
      const auto& ev = cs.events[ci];
      if (cr.edge_a == e)
        evs.push_back({ev.piece_a, ev.t_a, n + ci});
      else
        evs.push_back({ev.piece_b, ev.t_b, n + ci});
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
      if (a.piece != b.piece) return a.piece < b.piece;
      return a.t < b.t;
    });

    auto point_at = [&](int piece, const Rational& t) {
      return Point{path[piece].x + t * (path[piece + 1].x - path[piece].x),
                   path[piece].y + t * (path[piece + 1].y - path[piece].y)};
    };
    auto piece_dir = [&](int piece, bool fwd) {
      Point v{path[piece + 1].x - path[piece].x,
              path[piece + 1].y - path[piece].y};
      if (!fwd) v = {-v.x, -v.y};
      return v;
    };

    auto [eu, ev_] = d.graph.edges[e];
    int prev_node = eu;
    Point prev_pt = path.front();
    int prev_piece = 0;
    Rational prev_t(0);
    auto emit = [&](int node, const Point& pt, int piece, const Rational& t) {
      detail::Portion por;
      por.src_edge = e;
      por.from = prev_node;
      por.to = node;
      por.from_pt = prev_pt;
      por.to_pt = pt;
      por.dir_from = piece_dir(prev_piece, true);
      por.dir_to = piece_dir(piece, false);
      por.dx = pt.x - prev_pt.x;
      portions.push_back(por);
      prev_node = node;
      prev_pt = pt;
      prev_piece = piece;
      prev_t = t;
    };
    for (const auto& evx : evs) emit(evx.node, point_at(evx.piece, evx.t), evx.piece, evx.t);
    emit(ev_, path.back(), (int)path.size() - 2, Rational(1));
  }

  // Assemble V'/E'. Parallel E' edges are legal (two edges crossing twice).
  p.plane_graph.n = np;
  p.plane_graph.adj.assign(np, {});
  for (const auto& por : portions) {
    p.plane_graph.edges.emplace_back(std::min(por.from, por.to),
                                     std::max(por.from, por.to));
    p.plane_graph.adj[por.from].push_back(por.to);
    p.plane_graph.adj[por.to].push_back(por.from);
    p.prime_source.push_back(por.src_edge);
  }
  for (auto& a : p.plane_graph.adj) std::sort(a.begin(), a.end());

  // Rotation system from exact angular order of the darts at each vertex.
  // Dart 2i runs along portion i, dart 2i+1 is its reverse.
  const int nport = (int)portions.size();
  std::vector<std::vector<int>> rot(np);
  for (int i = 0; i < nport; ++i) {
    rot[portions[i].from].push_back(2 * i);
    rot[portions[i].to].push_back(2 * i + 1);
  }
  auto dart_dir = [&](int dart) {
    const auto& por = portions[dart / 2];
    return dart % 2 == 0 ? por.dir_from : por.dir_to;
  };
  for (auto& lst : rot)
    std::sort(lst.begin(), lst.end(), [&](int a, int b) {
      return detail::dir_less(dart_dir(a), dart_dir(b));
    });
  p.rotation = rot;

  // sanity: every dummy vertex has degree exactly 4
  for (int v = n; v < np; ++v)
    if ((int)rot[v].size() != 4)
      throw DrawingError("planarize_internal", "dummy vertex degree != 4");

  // Face tracing: successor of a dart is the rotation-successor of its twin.
  std::vector<int> rot_pos(2 * nport, -1);
  for (int v = 0; v < np; ++v)
    for (size_t i = 0; i < rot[v].size(); ++i) rot_pos[rot[v][i]] = (int)i;
  auto tail = [&](int dart) {
    const auto& por = portions[dart / 2];
    return dart % 2 == 0 ? por.from : por.to;
  };
  auto twin = [](int dart) { return dart ^ 1; };

  std::vector<int> dart_face(2 * nport, -1);
  std::vector<int> face_of_portionside(2 * nport, -1);
  for (int start = 0; start < 2 * nport; ++start) {
    if (dart_face[start] != -1) continue;
    const int fid = (int)p.faces.size();
    Face f;
    Rational winding_x(0);
    int dart = start;
    do {
      dart_face[dart] = fid;
      f.vertex_walk.push_back(tail(dart));
      const auto& por = portions[dart / 2];
      winding_x += (dart % 2 == 0) ? por.dx : -por.dx;
      int t = twin(dart);
      int v = tail(t);
      const auto& r = rot[v];
      dart = r[(rot_pos[t] + 1) % r.size()];
    } while (dart != start);
    f.size = (int)f.vertex_walk.size();
    f.segment_count = f.size;
    for (int v : f.vertex_walk)
      if (v < n) ++f.original_count;
    f.cell_size = f.original_count + f.segment_count;
    if (p.on_cylinder && !winding_x.is_zero()) {
      f.winding = (int)(winding_x / *d.metric.width).floor().convert_to<long long>();
      f.boundary = true;
    }
    p.faces.push_back(std::move(f));
  }
  (void)face_of_portionside;

  // Special case: a single isolated vertex still has the one outer face.
  if (nport == 0 && np == 1) p.faces.push_back(Face{{}, 0, 0, 0, 0, 0, false});

  // Euler check |V'| - |E'| + |F'| = 2 (sphere; a cylinder drawing is a
  // sphere drawing once the two cap faces are counted).
  const long long euler = (long long)np - nport + (long long)p.faces.size();
  if (euler != 2)
    throw DrawingError("euler_mismatch",
                       "V' - E' + F' = " + std::to_string(euler) + ", expected 2");

  if (p.on_cylinder) {
    int caps = 0;
    for (const auto& f : p.faces) caps += f.boundary ? 1 : 0;
    if (caps != 0 && caps != 2)
      throw DrawingError("planarize_internal",
                         "cylinder drawing must have exactly 0 or 2 cap faces");
  }

  // Each E' edge lies on exactly two face sides.
  p.prime_faces.assign(nport, {-1, -1});
  for (int i = 0; i < nport; ++i)
    p.prime_faces[i] = {dart_face[2 * i], dart_face[2 * i + 1]};

  return p;
}

// Sum over all faces of |V(f)| + |f| - 4; equals 4n - 8 on valid inputs.
inline Rational charge_total(const Planarization& p) {
  long long s = 0;
  for (const auto& f : p.faces) s += f.original_count + f.size - 4;
  return Rational(s);
}

}  // namespace kplanar
