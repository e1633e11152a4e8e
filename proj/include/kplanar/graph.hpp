#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "kplanar/rational.hpp"

namespace kplanar {

// Sentinel girth for forests.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

// Simple undirected graph with dense vertex ids 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // stored with u < v
  std::vector<std::vector<int>> adj;       // sorted neighbor lists
  std::vector<std::string> labels;         // empty or size n

  int add_vertex(const std::string& label = "") {
    adj.emplace_back();
    if (!label.empty() || !labels.empty()) {
      labels.resize(n + 1);
      labels[n] = label;
    }
    return n++;
  }

  bool has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  // Returns the edge id; loops and parallel edges are rejected.
  int add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("graph: loop edge");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: vertex out of range");
    if (has_edge(u, v)) throw std::invalid_argument("graph: parallel edge");
    if (u > v) std::swap(u, v);
    adj[u].insert(std::upper_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::upper_bound(adj[v].begin(), adj[v].end(), u), u);
    edges.emplace_back(u, v);
    return (int)edges.size() - 1;
  }

  int m() const { return (int)edges.size(); }
  int degree(int v) const { return (int)adj[v].size(); }

  bool connected() const {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          q.push(w);
        }
    }
    return cnt == n;
  }
};

// Length of a shortest cycle, kInfiniteGirth for forests. Per-vertex BFS;
// the closing-edge estimate can overshoot for one root but the minimum over
// all roots is exact.
inline int girth(const Graph& g) {
  int best = kInfiniteGirth;
  std::vector<int> dist(g.n), parent(g.n);
  for (int s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (2 * dist[u] >= best) break;  // deeper levels cannot improve
      for (int w : g.adj[u]) {
        if (w == parent[u]) {
          parent[u] = -2;  // consume the tree edge once; parallel-free graph
          continue;
        }
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

inline bool has_c3(const Graph& g) {
  // For every edge, look for a common neighbor.
  for (auto [u, v] : g.edges) {
    const auto& a = g.adj[u];
    const auto& b = g.adj[v];
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      (a[i] < b[j]) ? ++i : ++j;
    }
  }
  return false;
}

inline bool has_c4(const Graph& g) {
  // A 4-cycle is exactly a vertex pair with two common neighbors.
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      const auto& a = g.adj[u];
      const auto& b = g.adj[v];
      int common = 0;
      size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
          if (++common == 2) return true;
          ++i, ++j;
        } else {
          (a[i] < b[j]) ? ++i : ++j;
        }
      }
    }
  }
  return false;
}

struct DensityReport {
  int n = 0;
  int m = 0;
  Rational m_over_n;
};

inline DensityReport density_report(const Graph& g) {
  if (g.n < 1) throw std::invalid_argument("density_report: empty graph");
  return {g.n, g.m(), Rational(g.m(), g.n)};
}

// Biconnectivity via a DFS lowpoint pass (used as a validator, not a gate).
inline bool is_biconnected(const Graph& g) {
  if (g.n <= 2) return g.connected();
  std::vector<int> disc(g.n, -1), low(g.n, 0), parent(g.n, -1);
  std::vector<std::pair<int, int>> stack;  // (vertex, next neighbor index)
  int timer = 0;
  stack.push_back({0, 0});
  disc[0] = low[0] = timer++;
  int root_children = 0;
  while (!stack.empty()) {
    auto& [u, idx] = stack.back();
    if (idx < (int)g.adj[u].size()) {
      int w = g.adj[u][idx++];
      if (disc[w] == -1) {
        parent[w] = u;
        if (u == 0) ++root_children;
        disc[w] = low[w] = timer++;
        stack.push_back({w, 0});
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back().first;
        low[p] = std::min(low[p], low[u]);
        if (p != 0 && low[u] >= disc[p]) return false;
      }
    }
  }
  if (root_children > 1) return false;
  return timer == g.n;  // also fails on disconnected input
}

}  // namespace kplanar
