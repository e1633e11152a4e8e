#pragma once

#include <fstream>
#include <sstream>

#include "kplanar/drawing.hpp"

namespace kplanar {

// SVG export. Rational coordinates are mapped through one declared scale
// factor at the reporting layer; crossings are marked as hollow squares and
// vertex colors follow the construction labels.
inline std::string drawing_to_svg(const DrawnGraph& d, double scale = 40.0) {
  auto cs = compute_crossings(d);

  double minx = 0, miny = 0, maxx = 1, maxy = 1;
  bool first = true;
  auto grow = [&](const Point& p) {
    double x = p.x.to_double(), y = p.y.to_double();
    if (first) {
      minx = maxx = x;
      miny = maxy = y;
      first = false;
    } else {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  };
  for (const auto& p : d.positions) grow(p);
  for (const auto& path : d.edge_paths)
    for (const auto& p : path) grow(p);

  const double margin = 1.0;
  auto tx = [&](const Point& p) { return (p.x.to_double() - minx + margin) * scale; };
  auto ty = [&](const Point& p) {
    return (maxy - p.y.to_double() + margin) * scale;  // y grows upward
  };

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  const double wpx = (maxx - minx + 2 * margin) * scale;
  const double hpx = (maxy - miny + 2 * margin) * scale;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << wpx
     << "\" height=\"" << hpx << "\" viewBox=\"0 0 " << wpx << " " << hpx
     << "\" data-scale=\"" << scale << "\">\n";

  auto vertex_color = [&](int v) -> std::string {
    if (d.graph.labels.empty()) return "black";
    const std::string& l = d.graph.labels[v];
    if (l == "red" || l == "blue" || l == "black") return l;
    return "black";
  };

  for (int e = 0; e < d.graph.m(); ++e) {
    auto [u, v] = d.graph.edges[e];
    std::string cu = vertex_color(u), cv = vertex_color(v);
    std::string stroke = cu == cv ? cu : "dimgray";
    os << "  <polyline fill=\"none\" stroke=\"" << stroke
       << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < d.edge_paths[e].size(); ++i) {
      const Point& p = d.edge_paths[e][i];
      os << (i ? " " : "") << tx(p) << "," << ty(p);
    }
    os << "\"/>\n";
  }
  for (int v = 0; v < d.graph.n; ++v) {
    const Point& p = d.positions[v];
    os << "  <circle cx=\"" << tx(p) << "\" cy=\"" << ty(p)
       << "\" r=\"3.5\" fill=\"" << vertex_color(v) << "\"/>\n";
  }
  const double s = 4.0;
  for (const auto& c : cs) {
    os << "  <rect x=\"" << tx(c.point) - s / 2 << "\" y=\""
       << ty(c.point) - s / 2 << "\" width=\"" << s << "\" height=\"" << s
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline void save_svg(const DrawnGraph& d, const std::string& path,
                     double scale = 40.0) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << drawing_to_svg(d, scale);
}

}  // namespace kplanar
