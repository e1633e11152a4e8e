#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "kplanar/geometry.hpp"
#include "kplanar/graph.hpp"

namespace kplanar {

// Invalid drawings are reported as errors, never as crossings.
class DrawingError : public std::runtime_error {
 public:
  DrawingError(std::string kind, std::string msg, std::vector<int> elems = {})
      : std::runtime_error(kind + ": " + msg),
        kind_(std::move(kind)),
        elems_(std::move(elems)) {}
  const std::string& kind() const { return kind_; }
  const std::vector<int>& elements() const { return elems_; }

 private:
  std::string kind_;
  std::vector<int> elems_;
};

// A graph together with a polyline drawing. Edge paths run from pos[u] to
// pos[v] (canonically modulo the width on a cylinder) and may use
// universal-cover x-representatives; an edge's x-extent must stay below the
// period so the {-W,0,+W} translate scheme sees every crossing once.
struct DrawnGraph {
  Graph graph;
  std::vector<Point> positions;
  std::vector<std::vector<Point>> edge_paths;
  CylinderMetric metric;

  int add_vertex(Point p, const std::string& label = "") {
    positions.push_back(std::move(p));
    return graph.add_vertex(label);
  }
  // Straight edge or polyline with bends (interior points only). Paths are
  // stored in the normalized u < v orientation.
  int add_edge(int u, int v, std::vector<Point> bends = {}) {
    if (u > v) {
      std::swap(u, v);
      std::reverse(bends.begin(), bends.end());
    }
    int id = graph.add_edge(u, v);
    std::vector<Point> path;
    path.push_back(positions[u]);
    for (auto& b : bends) path.push_back(std::move(b));
    path.push_back(positions[v]);
    edge_paths.push_back(std::move(path));
    return id;
  }
};

struct Crossing {
  int edge_a = 0, edge_b = 0;  // edge_a < edge_b
  Point point;                 // canonical (mod W on a cylinder)
  friend bool operator==(const Crossing&, const Crossing&) = default;
  friend std::strong_ordering operator<=>(const Crossing& x, const Crossing& y) {
    if (auto c = x.edge_a <=> y.edge_a; c != 0) return c;
    if (auto c = x.edge_b <=> y.edge_b; c != 0) return c;
    return x.point <=> y.point;
  }
};

namespace detail {

struct Piece {
  int edge = 0;
  int idx = 0;  // piece index along the polyline
  Segment seg;  // representative coordinates as drawn
};

inline long long floor_ll(const Rational& r) {
  return r.floor().convert_to<long long>();
}

// Crossing location on both edges, in edge-local order.
struct CrossingEvent {
  Point canonical;
  int piece_a = 0, piece_b = 0;
  Rational t_a, t_b;  // parameter within the piece
};

}  // namespace detail

// Full crossing structure of a drawing; validates on the way.
struct CrossingSet {
  std::vector<Crossing> crossings;                  // deterministic order
  std::vector<std::vector<int>> per_edge;           // crossing ids per edge
  std::vector<detail::CrossingEvent> events;        // parallel to crossings
};

namespace detail {

class CrossingScan {
 public:
  explicit CrossingScan(const DrawnGraph& d) : d_(d) {
    validate_structure();
    build_pieces();
  }

  CrossingSet run() {
    build_grid();
    find_intersections();
    check_vertices_clear();
    finalize();
    return std::move(out_);
  }

 private:
  const DrawnGraph& d_;
  std::vector<Piece> pieces_;
  std::vector<std::vector<int>> edge_pieces_;
  std::unordered_map<long long, std::vector<int>> grid_;
  CrossingSet out_;
  // keyed by (ea, eb, canonical point)
  std::map<std::tuple<int, int, Point>, CrossingEvent> found_;

  bool cyl() const { return d_.metric.on_cylinder(); }
  Rational width() const { return *d_.metric.width; }

  void validate_structure() {
    const Graph& g = d_.graph;
    if ((int)d_.positions.size() != g.n)
      throw DrawingError("invalid_drawing", "positions/vertex count mismatch");
    if ((int)d_.edge_paths.size() != g.m())
      throw DrawingError("invalid_drawing", "edge_paths/edge count mismatch");

    std::set<Point> seen;
    for (int v = 0; v < g.n; ++v) {
      Point c = d_.metric.canonical(d_.positions[v]);
      if (!seen.insert(c).second)
        throw DrawingError("duplicate_vertex_position",
                           "two vertices share a position", {v});
    }
    for (int e = 0; e < g.m(); ++e) {
      const auto& path = d_.edge_paths[e];
      if (path.size() < 2)
        throw DrawingError("invalid_polyline", "edge path too short", {e});
      for (size_t i = 0; i + 1 < path.size(); ++i)
        if (path[i] == path[i + 1])
          throw DrawingError("invalid_polyline",
                             "consecutive bend points coincide", {e});
      auto [u, v] = g.edges[e];
      if (d_.metric.canonical(path.front()) != d_.metric.canonical(d_.positions[u]) ||
          d_.metric.canonical(path.back()) != d_.metric.canonical(d_.positions[v]))
        throw DrawingError("endpoint_mismatch",
                           "edge path does not join its endpoints", {e});
      if (cyl()) {
        Rational lo = path[0].x, hi = path[0].x;
        for (const auto& p : path) {
          lo = std::min(lo, p.x);
          hi = std::max(hi, p.x);
        }
        if (hi - lo >= width())
          throw DrawingError("edge_spans_period",
                             "edge x-extent reaches the cylinder period", {e});
        if (lo < Rational(0) || hi >= 2 * width())
          throw DrawingError("invalid_polyline",
                             "cylinder representatives must lie in [0, 2W)",
                             {e});
      }
    }
  }

  void build_pieces() {
    edge_pieces_.resize(d_.graph.m());
    for (int e = 0; e < d_.graph.m(); ++e) {
      const auto& path = d_.edge_paths[e];
      for (size_t i = 0; i + 1 < path.size(); ++i) {
        edge_pieces_[e].push_back((int)pieces_.size());
        pieces_.push_back({e, (int)i, Segment{path[i], path[i + 1]}});
      }
    }
  }

  static Segment shifted(const Segment& s, const Rational& dx) {
    return {{s.a.x + dx, s.a.y}, {s.b.x + dx, s.b.y}};
  }

  // True when p coincides (canonically) with a graph vertex shared by both edges.
  bool legit_shared_vertex(int ea, int eb, const Point& p) const {
    auto [a1, a2] = d_.graph.edges[ea];
    auto [b1, b2] = d_.graph.edges[eb];
    const Point c = d_.metric.canonical(p);
    for (int v : {a1, a2})
      if ((v == b1 || v == b2) && d_.metric.canonical(d_.positions[v]) == c)
        return true;
    return false;
  }

  // True when p is a terminal point of the piece's polyline (not a bend).
  bool is_polyline_terminal(const Piece& pc, const Point& p) const {
    const auto& path = d_.edge_paths[pc.edge];
    if (pc.idx == 0 && p == path.front()) return true;
    if (pc.idx == (int)path.size() - 2 && p == path.back()) return true;
    return false;
  }

  void handle_pair(const Piece& pa, const Segment& sa, const Rational& shift_a,
                   const Piece& pb) {
    if (pa.edge == pb.edge) {
      if (!shift_a.is_zero()) return;  // extent < W keeps translates apart
      if (std::abs(pa.idx - pb.idx) == 1) {
        // consecutive pieces share exactly the bend point
        auto r = segment_intersection(sa, pb.seg);
        if (r.kind != SegRelation::shared_endpoint)
          throw DrawingError("self_intersection",
                             "edge polyline self-intersects", {pa.edge});
        return;
      }
      auto r = segment_intersection(sa, pb.seg);
      if (r.kind != SegRelation::none)
        throw DrawingError("self_intersection",
                           "edge polyline self-intersects", {pa.edge});
      return;
    }

    auto r = segment_intersection(sa, pb.seg);
    switch (r.kind) {
      case SegRelation::none:
        return;
      case SegRelation::overlap:
        throw DrawingError("degenerate_overlap",
                           "edges overlap along a segment",
                           {pa.edge, pb.edge});
      case SegRelation::shared_endpoint: {
        const Point& p = *r.point;
        // Fine when it is a common graph vertex; otherwise two edges touch
        // at a bend, which violates general position.
        bool terminal_a = is_polyline_terminal(pa, shift_back(p, shift_a));
        bool terminal_b = is_polyline_terminal(pb, p);
        if (terminal_a && terminal_b && legit_shared_vertex(pa.edge, pb.edge, p))
          return;
        throw DrawingError("bend_touch", "edges touch at a non-vertex point",
                           {pa.edge, pb.edge});
      }
      case SegRelation::endpoint_touch: {
        // A polyline terminal in the other's interior means an edge passes
        // through a vertex; a bend in the interior breaks general position.
        const Point& p = *r.point;
        const Point pal = shift_back(p, shift_a);
        const bool endpoint_of_a = (p == sa.a || p == sa.b);
        if (endpoint_of_a) {
          if (is_polyline_terminal(pa, pal))
            throw DrawingError("edge_through_vertex",
                               "edge passes through a vertex position",
                               {pb.edge, pa.edge});
        } else {
          if (is_polyline_terminal(pb, p))
            throw DrawingError("edge_through_vertex",
                               "edge passes through a vertex position",
                               {pa.edge, pb.edge});
        }
        throw DrawingError("bend_touch", "edge passes through a bend point",
                           {pa.edge, pb.edge});
      }
      case SegRelation::proper: {
        if (edges_adjacent(pa.edge, pb.edge))
          throw DrawingError("adjacent_edge_crossing",
                             "adjacent edges cross", {pa.edge, pb.edge});
        record(pa, pb, *r.point, shift_a);
        return;
      }
    }
  }

  static Point shift_back(const Point& p, const Rational& dx) {
    return {p.x - dx, p.y};
  }

  bool edges_adjacent(int ea, int eb) const {
    auto [a1, a2] = d_.graph.edges[ea];
    auto [b1, b2] = d_.graph.edges[eb];
    return a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
  }

  void record(const Piece& pa, const Piece& pb, const Point& p,
              const Rational& shift_a) {
    int ea = pa.edge, eb = pb.edge;
    Point local_a = shift_back(p, shift_a);
    Rational ta = segment_parameter(local_a, pieceseg(pa));
    Rational tb = segment_parameter(p, pb.seg);
    CrossingEvent ev;
    ev.canonical = d_.metric.canonical(p);
    if (ea < eb) {
      ev.piece_a = pa.idx;
      ev.piece_b = pb.idx;
      ev.t_a = ta;
      ev.t_b = tb;
    } else {
      std::swap(ea, eb);
      ev.piece_a = pb.idx;
      ev.piece_b = pa.idx;
      ev.t_a = tb;
      ev.t_b = ta;
    }
    found_.insert({{ea, eb, ev.canonical}, ev});
  }

  Segment pieceseg(const Piece& p) const { return p.seg; }

  static long long cell_key(long long x, long long y) {
    return x * 2000003LL + y;
  }

  template <typename Fn>
  void bbox_cells(const Segment& s, Fn&& fn) const {
    long long x0 = detail::floor_ll(std::min(s.a.x, s.b.x));
    long long x1 = detail::floor_ll(std::max(s.a.x, s.b.x));
    long long y0 = detail::floor_ll(std::min(s.a.y, s.b.y));
    long long y1 = detail::floor_ll(std::max(s.a.y, s.b.y));
    for (long long x = x0; x <= x1; ++x)
      for (long long y = y0; y <= y1; ++y) fn(cell_key(x, y));
  }

  // Bucket pieces on an integer grid so both the pair scan and the
  // vertex-clearance check stay near-linear.
  void build_grid() {
    for (int i = 0; i < (int)pieces_.size(); ++i)
      bbox_cells(pieces_[i].seg,
                 [&](long long key) { grid_[key].push_back(i); });
  }

  void find_intersections() {
    // Representatives live in [0, 2W), so relative shifts up to two periods
    // are enough to realize every cylinder crossing at least once.
    const int shift_lo = cyl() ? -2 : 0;
    const int shift_hi = cyl() ? 2 : 0;

    // candidate pairs, deduplicated
    std::set<std::pair<long long, long long>> tested;
    auto consider = [&](int i, int shift_i, int j) {
      long long a = (long long)i * 8 + (shift_i + 2);
      long long b = j;
      if (!tested.insert({a, b}).second) return;
      const Piece& pa = pieces_[i];
      const Piece& pb = pieces_[j];
      Segment sa = shift_i == 0
                       ? pa.seg
                       : shifted(pa.seg, Rational(shift_i) * width());
      handle_pair(pa, sa, Rational(shift_i) * (cyl() ? width() : Rational(0)),
                  pb);
    };

    for (int i = 0; i < (int)pieces_.size(); ++i) {
      for (int sh = shift_lo; sh <= shift_hi; ++sh) {
        Segment sa = sh == 0 ? pieces_[i].seg
                             : shifted(pieces_[i].seg, Rational(sh) * width());
        bbox_cells(sa, [&](long long key) {
          auto it = grid_.find(key);
          if (it == grid_.end()) return;
          for (int piece : it->second) {
            if (sh == 0 && piece <= i) continue;  // unordered at shift 0
            if (sh != 0 && piece == i) continue;
            consider(i, sh, piece);
          }
        });
      }
    }
  }

  void check_vertices_clear() {
    // A piece through a vertex representative also covers the point's grid
    // cell, so that bucket is a complete candidate list.
    for (int v = 0; v < d_.graph.n; ++v) {
      const Point base = d_.metric.canonical(d_.positions[v]);
      std::vector<Point> reps{base};
      if (cyl())
        for (int k = -2; k <= 3; ++k) {
          if (k == 0) continue;
          reps.push_back({base.x + Rational(k) * width(), base.y});
        }
      for (const Point& p : reps) {
        auto it =
            grid_.find(cell_key(detail::floor_ll(p.x), detail::floor_ll(p.y)));
        if (it == grid_.end()) continue;
        for (int pi : it->second) {
          const Piece& pc = pieces_[pi];
          auto [u, w] = d_.graph.edges[pc.edge];
          const bool incident = (u == v || w == v);
          if (!point_on_segment(p, pc.seg)) continue;
          if (incident && is_polyline_terminal(pc, p)) continue;
          if (incident)
            throw DrawingError("edge_through_vertex",
                               "edge re-enters its own endpoint",
                               {pc.edge, v});
          throw DrawingError("edge_through_vertex",
                             "edge passes through a vertex position",
                             {pc.edge, v});
        }
      }
    }
  }

  void finalize() {
    // Coincident crossing points (three edges through a point, or two
    // crossings at the same spot) violate general position.
    std::map<Point, int> at_point;
    for (const auto& [key, ev] : found_) {
      if (++at_point[ev.canonical] > 1)
        throw DrawingError("triple_point",
                           "two crossings share a point",
                           {std::get<0>(key), std::get<1>(key)});
    }
    out_.per_edge.assign(d_.graph.m(), {});
    for (const auto& [key, ev] : found_) {
      auto [ea, eb, pt] = key;
      out_.per_edge[ea].push_back((int)out_.crossings.size());
      out_.per_edge[eb].push_back((int)out_.crossings.size());
      out_.crossings.push_back({ea, eb, pt});
      out_.events.push_back(ev);
    }
  }
};

}  // namespace detail

inline CrossingSet compute_crossing_set(const DrawnGraph& d) {
  return detail::CrossingScan(d).run();
}

inline std::vector<Crossing> compute_crossings(const DrawnGraph& d) {
  return compute_crossing_set(d).crossings;
}

inline int local_crossing_number(const DrawnGraph& d) {
  auto cs = compute_crossing_set(d);
  size_t k = 0;
  for (const auto& lst : cs.per_edge) k = std::max(k, lst.size());
  return (int)k;
}

// Repeatedly delete an edge with the most crossings (ties: smallest edge id)
// until the drawing is plane. Returns (edge id, crossings at removal).
inline std::vector<std::pair<int, int>> greedy_uncross(const DrawnGraph& d) {
  auto cs = compute_crossing_set(d);
  const int m = d.graph.m();
  std::vector<int> count(m, 0);
  std::vector<char> removed(m, 0), dead((int)cs.crossings.size(), 0);
  for (const auto& c : cs.crossings) {
    ++count[c.edge_a];
    ++count[c.edge_b];
  }
  std::vector<std::pair<int, int>> trace;
  for (;;) {
    int best = -1;
    for (int e = 0; e < m; ++e)
      if (!removed[e] && count[e] > 0 && (best == -1 || count[e] > count[best]))
        best = e;
    if (best == -1) break;
    trace.push_back({best, count[best]});
    removed[best] = 1;
    for (size_t i = 0; i < cs.crossings.size(); ++i) {
      if (dead[i]) continue;
      const auto& c = cs.crossings[i];
      if (c.edge_a == best || c.edge_b == best) {
        dead[i] = 1;
        --count[c.edge_a];
        --count[c.edge_b];
      }
    }
  }
  return trace;
}

}  // namespace kplanar
