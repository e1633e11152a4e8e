#pragma once

#include <fstream>

#include <json.hpp>

#include "kplanar/drawing.hpp"

namespace kplanar {

using json = nlohmann::json;

// Drawing file format:
//   { "metric": {"cylinder_width": "p/q"} | null,
//     "vertices": [{"id": int, "x": "p/q", "y": "p/q", "label": str?}],
//     "edges": [{"u": int, "v": int, "bends": [["p/q","p/q"], ...]}] }
// Rationals are "p/q" strings; bends keep the representative coordinates
// they were drawn with.

inline json drawing_to_json(const DrawnGraph& d) {
  json j;
  if (d.metric.on_cylinder())
    j["metric"] = {{"cylinder_width", d.metric.width->str()}};
  else
    j["metric"] = nullptr;
  j["vertices"] = json::array();
  for (int v = 0; v < d.graph.n; ++v) {
    json vj = {{"id", v},
               {"x", d.positions[v].x.str()},
               {"y", d.positions[v].y.str()}};
    if (!d.graph.labels.empty() && !d.graph.labels[v].empty())
      vj["label"] = d.graph.labels[v];
    j["vertices"].push_back(std::move(vj));
  }
  j["edges"] = json::array();
  for (int e = 0; e < d.graph.m(); ++e) {
    auto [u, v] = d.graph.edges[e];
    json bends = json::array();
    const auto& path = d.edge_paths[e];
    for (size_t i = 1; i + 1 < path.size(); ++i)
      bends.push_back({path[i].x.str(), path[i].y.str()});
    j["edges"].push_back({{"u", u}, {"v", v}, {"bends", std::move(bends)}});
  }
  return j;
}

namespace detail {

// Pick the x-representative of `canonical` nearest to `anchor` (mod W).
inline Rational nearest_rep(const Rational& canonical, const Rational& anchor,
                            const Rational& w) {
  Rational k = ((anchor - canonical) / w + Rational(1, 2)).floor();
  return canonical + Rational(std::move(k)) * w;
}

}  // namespace detail

inline DrawnGraph drawing_from_json(const json& j) {
  try {
    DrawnGraph d;
    if (j.contains("metric") && !j.at("metric").is_null())
      d.metric = make_cylinder(
          Rational::parse(j.at("metric").at("cylinder_width").get<std::string>()));

    std::map<int, Point> pos;
    std::map<int, std::string> labels;
    for (const auto& vj : j.at("vertices")) {
      int id = vj.at("id").get<int>();
      pos[id] = {Rational::parse(vj.at("x").get<std::string>()),
                 Rational::parse(vj.at("y").get<std::string>())};
      if (vj.contains("label")) labels[id] = vj.at("label").get<std::string>();
    }
    if (!pos.empty() &&
        (pos.begin()->first != 0 || std::prev(pos.end())->first != (int)pos.size() - 1))
      throw std::invalid_argument("vertex ids must be dense 0..n-1");
    for (auto& [id, p] : pos) d.add_vertex(p, labels.count(id) ? labels[id] : "");

    for (const auto& ej : j.at("edges")) {
      int u = ej.at("u").get<int>();
      int v = ej.at("v").get<int>();
      std::vector<Point> bends;
      for (const auto& bj : ej.at("bends"))
        bends.push_back({Rational::parse(bj.at(0).get<std::string>()),
                         Rational::parse(bj.at(1).get<std::string>())});
      if (u > v) {
        std::swap(u, v);
        std::reverse(bends.begin(), bends.end());
      }
      int id = d.graph.add_edge(u, v);
      (void)id;
      std::vector<Point> path;
      if (!d.metric.on_cylinder()) {
        path.push_back(d.positions[u]);
        for (auto& b : bends) path.push_back(b);
        path.push_back(d.positions[v]);
      } else {
        // choose endpoint representatives anchored at the bends, or the
        // extent-minimizing pair for straight edges
        const Rational& w = *d.metric.width;
        Point pu = d.metric.canonical(d.positions[u]);
        Point pv = d.metric.canonical(d.positions[v]);
        Rational ux = pu.x, vx = pv.x;
        if (!bends.empty()) {
          ux = detail::nearest_rep(pu.x, bends.front().x, w);
          vx = detail::nearest_rep(pv.x, bends.back().x, w);
        } else {
          vx = detail::nearest_rep(pv.x, ux, w);
        }
        path.push_back({ux, pu.y});
        for (auto& b : bends) path.push_back(b);
        path.push_back({vx, pv.y});
        // shift into [0, 2W) if a representative went negative
        Rational lo = path[0].x;
        for (const auto& p : path) lo = std::min(lo, p.x);
        if (lo < Rational(0))
          for (auto& p : path) p.x += w;
      }
      d.edge_paths.push_back(std::move(path));
    }
    return d;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("drawing json: ") + e.what());
  }
}

inline void save_drawing(const DrawnGraph& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << drawing_to_json(d).dump(2) << "\n";
}

inline DrawnGraph load_drawing(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  json j;
  in >> j;
  return drawing_from_json(j);
}

}  // namespace kplanar
