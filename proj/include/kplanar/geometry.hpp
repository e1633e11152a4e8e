#pragma once

#include <optional>
#include <vector>

#include "kplanar/rational.hpp"

namespace kplanar {

struct Point {
  Rational x, y;
  friend bool operator==(const Point& a, const Point& b) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

struct Segment {
  Point a, b;
  bool degenerate() const { return a == b; }
};

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear.
inline int orient(const Point& a, const Point& b, const Point& c) {
  const Rational cross =
      (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross.sign();
}

// p collinear with s assumed checked by caller when needed; here full test.
inline bool point_on_segment(const Point& p, const Segment& s) {
  if (orient(s.a, s.b, p) != 0) return false;
  auto [lox, hix] = std::minmax(s.a.x, s.b.x);
  auto [loy, hiy] = std::minmax(s.a.y, s.b.y);
  return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

inline bool point_in_segment_interior(const Point& p, const Segment& s) {
  return point_on_segment(p, s) && p != s.a && p != s.b;
}

enum class SegRelation {
  none,            // disjoint
  proper,          // interiors cross in exactly one point
  shared_endpoint, // meet exactly at a common endpoint
  endpoint_touch,  // an endpoint of one lies in the other's interior
  overlap,         // collinear with a common sub-segment of positive length
};

struct SegIntersection {
  SegRelation kind = SegRelation::none;
  std::optional<Point> point;  // set for proper / shared_endpoint / endpoint_touch
};

// Exact classification of how two non-degenerate segments meet. The spec's
// four-way result is extended with endpoint_touch so that drawings where an
// edge stabs a vertex or bend can be rejected instead of silently passing.
inline SegIntersection segment_intersection(const Segment& s, const Segment& t) {
  const int d1 = orient(t.a, t.b, s.a);
  const int d2 = orient(t.a, t.b, s.b);
  const int d3 = orient(s.a, s.b, t.a);
  const int d4 = orient(s.a, s.b, t.b);

  if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
    // Collinear. Order along the dominant axis.
    const bool use_x = s.a.x != s.b.x;
    auto key = [&](const Point& p) { return use_x ? p.x : p.y; };
    const Rational ks_a = key(s.a), ks_b = key(s.b);
    const Rational kt_a = key(t.a), kt_b = key(t.b);
    const Rational s_lo = std::min(ks_a, ks_b), s_hi = std::max(ks_a, ks_b);
    const Rational t_lo = std::min(kt_a, kt_b), t_hi = std::max(kt_a, kt_b);
    const Rational lo = std::max(s_lo, t_lo), hi = std::min(s_hi, t_hi);
    if (lo > hi) return {SegRelation::none, std::nullopt};
    if (lo < hi) return {SegRelation::overlap, std::nullopt};
    // Single shared point; by collinearity it is an endpoint of both.
    const Point p = ks_a == lo ? s.a : s.b;
    return {SegRelation::shared_endpoint, p};
  }

  // Shared endpoints (non-collinear case: they can meet nowhere else).
  if (s.a == t.a || s.a == t.b) return {SegRelation::shared_endpoint, s.a};
  if (s.b == t.a || s.b == t.b) return {SegRelation::shared_endpoint, s.b};

  // Endpoint of one in the interior of the other.
  if (d1 == 0 && point_on_segment(s.a, t)) return {SegRelation::endpoint_touch, s.a};
  if (d2 == 0 && point_on_segment(s.b, t)) return {SegRelation::endpoint_touch, s.b};
  if (d3 == 0 && point_on_segment(t.a, s)) return {SegRelation::endpoint_touch, t.a};
  if (d4 == 0 && point_on_segment(t.b, s)) return {SegRelation::endpoint_touch, t.b};

  if (d1 * d2 < 0 && d3 * d4 < 0) {
    // Proper crossing; solve s.a + u*(s.b-s.a) on t's supporting line.
    const Rational dx1 = s.b.x - s.a.x, dy1 = s.b.y - s.a.y;
    const Rational dx2 = t.b.x - t.a.x, dy2 = t.b.y - t.a.y;
    const Rational denom = dx1 * dy2 - dy1 * dx2;
    const Rational u =
        ((t.a.x - s.a.x) * dy2 - (t.a.y - s.a.y) * dx2) / denom;
    return {SegRelation::proper, Point{s.a.x + u * dx1, s.a.y + u * dy1}};
  }
  return {SegRelation::none, std::nullopt};
}

// Parameter of p along s in [0,1]; p must lie on s.
inline Rational segment_parameter(const Point& p, const Segment& s) {
  if (s.a.x != s.b.x) return (p.x - s.a.x) / (s.b.x - s.a.x);
  return (p.y - s.a.y) / (s.b.y - s.a.y);
}

// x-periodic metric; absent width means the plane.
struct CylinderMetric {
  std::optional<Rational> width;
  bool on_cylinder() const { return width.has_value(); }
  Rational canonical_x(const Rational& x) const {
    if (!width) return x;
    const Rational& w = *width;
    return x - Rational(Int((x / w).floor())) * w;
  }
  Point canonical(const Point& p) const { return {canonical_x(p.x), p.y}; }
};

inline CylinderMetric make_cylinder(Rational width) {
  if (width.sign() <= 0) throw std::domain_error("cylinder width must be positive");
  return CylinderMetric{std::move(width)};
}

// Translates of seg by x-shifts {-W, 0, +W}, clipped to the fundamental
// strip [0, W). Pieces of zero length are dropped.
inline std::vector<Segment> lift_to_strip(const Segment& seg, const CylinderMetric& metric) {
  if (!metric.on_cylinder()) return {seg};
  const Rational& w = *metric.width;
  std::vector<Segment> out;
  for (int shift = -1; shift <= 1; ++shift) {
    Point a{seg.a.x + Rational(shift) * w, seg.a.y};
    Point b{seg.b.x + Rational(shift) * w, seg.b.y};
    // Clip the segment to 0 <= x <= W, parametrically.
    Rational t0(0), t1(1);
    const Rational dx = b.x - a.x;
    auto clip = [&](const Rational& num, const Rational& den) {
      // Constraint num + t*den >= 0.
      if (den.is_zero()) return num >= Rational(0);
      const Rational t = -num / den;
      if (den > Rational(0)) t0 = std::max(t0, t);
      else t1 = std::min(t1, t);
      return true;
    };
    if (!clip(a.x, dx)) continue;            // x >= 0
    if (!clip(w - a.x, -dx)) continue;       // x <= W
    if (t0 >= t1) continue;
    Point pa{a.x + t0 * dx, a.y + t0 * (b.y - a.y)};
    Point pb{a.x + t1 * dx, a.y + t1 * (b.y - a.y)};
    if (pa == pb) continue;
    out.push_back({pa, pb});
  }
  return out;
}

}  // namespace kplanar
