#pragma once

// Shared test helpers. The distance routines here are deliberately written
// as naive textbook algorithms, independent of the library's search code, so
// they can serve as cross-checking oracles.

#include <optional>
#include <vector>

#include "xdspan/graph.hpp"
#include "xdspan/random_graph.hpp"

namespace xdt {

using xds::Dist;
using xds::DirectedGraph;
using xds::Edge;
using xds::kInfDist;
using xds::Vertex;

// O(n^3) all-pairs distances.
inline std::vector<std::vector<Dist>> floyd_warshall(const DirectedGraph& g) {
  std::size_t n = static_cast<std::size_t>(g.num_vertices());
  std::vector<std::vector<Dist>> d(n, std::vector<Dist>(n, kInfDist));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) {
    auto& cell = d[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.to)];
    if (e.weight < cell) cell = e.weight;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] >= kInfDist) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (d[k][j] < kInfDist && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    }
  return d;
}

// O(n*m) single-source distances by repeated edge relaxation, optionally in
// the reverse direction, optionally from several sources at distance 0.
inline std::vector<Dist> bellman_ford(const DirectedGraph& g, const std::vector<Vertex>& sources,
                                      bool reverse = false) {
  std::size_t n = static_cast<std::size_t>(g.num_vertices());
  std::vector<Dist> d(n, kInfDist);
  for (Vertex s : sources) d[static_cast<std::size_t>(s)] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : g.edges()) {
      Vertex a = reverse ? e.to : e.from;
      Vertex b = reverse ? e.from : e.to;
      Dist da = d[static_cast<std::size_t>(a)];
      if (da < kInfDist && da + e.weight < d[static_cast<std::size_t>(b)]) {
        d[static_cast<std::size_t>(b)] = da + e.weight;
        changed = true;
      }
    }
  }
  return d;
}

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
inline DirectedGraph cycle_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, static_cast<Vertex>(v + 1), 1});
  if (n >= 2) edges.push_back({static_cast<Vertex>(n - 1), 0, 1});
  return DirectedGraph(n, std::move(edges), false);
}

// Directed path 0 -> 1 -> ... -> n-1.
inline DirectedGraph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, static_cast<Vertex>(v + 1), 1});
  return DirectedGraph(n, std::move(edges), false);
}

}  // namespace xdt
