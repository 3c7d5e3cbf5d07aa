#pragma once

// Single-source / multi-source shortest paths with unit-weight BFS or
// Dijkstra, plus the derived primitives the sparsifiers are built from:
// tree depth, closest-vertex orderings, and the classic 2-approximation of
// the diameter from one pivot vertex.

#include <algorithm>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

#include "xdspan/graph.hpp"

namespace xds {

enum class Direction { Out, In };

inline const char* direction_name(Direction d) { return d == Direction::Out ? "out" : "in"; }

// Shortest-path forest from a set of roots, all roots at distance 0 (the
// roots act as one contracted super-source). parent[v] is the edge that
// last relaxed v; among equal-distance alternatives the smallest edge id
// wins, which pins down one canonical tree per (graph, roots, direction).
struct ShortestPathTree {
  std::vector<Vertex> roots;  // sorted ascending
  Direction direction = Direction::Out;
  std::optional<Dist> depth_limit;  // vertices farther than this stay unreached
  std::vector<Dist> dist;           // kInfDist when unreached
  std::vector<EdgeId> parent;       // kNoEdge at roots and unreached vertices

  bool reaches_all() const {
    return std::all_of(dist.begin(), dist.end(), [](Dist d) { return d < kInfDist; });
  }

  // Max distance over reached vertices. 0 for an empty graph.
  Dist depth_reached() const {
    Dist best = 0;
    for (Dist d : dist)
      if (d < kInfDist && d > best) best = d;
    return best;
  }

  // Deepest reached vertex, ties to the smallest id. kNoVertex when n == 0.
  Vertex deepest_vertex() const {
    Vertex best = kNoVertex;
    Dist best_d = -1;
    for (Vertex v = 0; v < static_cast<Vertex>(dist.size()); ++v) {
      Dist d = dist[static_cast<std::size_t>(v)];
      if (d < kInfDist && d > best_d) {
        best_d = d;
        best = v;
      }
    }
    return best;
  }

  // Edge ids of the tree path from the forest down to v (unordered set use).
  // Empty when v is a root; throws when v is unreached.
  std::vector<EdgeId> path_edges(Vertex v, const DirectedGraph& g) const {
    if (dist[static_cast<std::size_t>(v)] >= kInfDist)
      throw std::invalid_argument("path_edges: vertex unreached");
    std::vector<EdgeId> out;
    Vertex cur = v;
    while (parent[static_cast<std::size_t>(cur)] != kNoEdge) {
      EdgeId eid = parent[static_cast<std::size_t>(cur)];
      out.push_back(eid);
      const Edge& e = g.edge(eid);
      cur = (direction == Direction::Out) ? e.from : e.to;
    }
    return out;
  }
};

// BFS (unweighted) or Dijkstra (weighted) from a root set. Roots must be
// distinct and in range. depth_limit truncates the search: vertices whose
// distance would exceed it are left unreached.
inline ShortestPathTree sssp(const DirectedGraph& g, std::vector<Vertex> roots,
                             Direction dir, std::optional<Dist> depth_limit = std::nullopt) {
  std::sort(roots.begin(), roots.end());
  if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
    throw std::invalid_argument("sssp: duplicate root");
  for (Vertex r : roots)
    if (r < 0 || r >= g.num_vertices()) throw std::out_of_range("sssp: root out of range");

  ShortestPathTree t;
  t.roots = roots;
  t.direction = dir;
  t.depth_limit = depth_limit;
  t.dist.assign(static_cast<std::size_t>(g.num_vertices()), kInfDist);
  t.parent.assign(static_cast<std::size_t>(g.num_vertices()), kNoEdge);
  Dist cap = depth_limit.value_or(kInfDist - 1);
  if (cap < 0) return t;

  auto scan = [&](Vertex u) {
    return dir == Direction::Out ? g.out_edges(u) : g.in_edges(u);
  };
  auto head = [&](EdgeId id) {
    const Edge& e = g.edge(id);
    return dir == Direction::Out ? e.to : e.from;
  };

  if (!g.weighted()) {
    std::queue<Vertex> q;
    for (Vertex r : roots) {
      t.dist[static_cast<std::size_t>(r)] = 0;
      q.push(r);
    }
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      Dist du = t.dist[static_cast<std::size_t>(u)];
      if (du >= cap) continue;
      for (EdgeId id : scan(u)) {
        Vertex v = head(id);
        Dist& dv = t.dist[static_cast<std::size_t>(v)];
        if (dv == kInfDist) {
          dv = du + 1;
          t.parent[static_cast<std::size_t>(v)] = id;
          q.push(v);
        } else if (dv == du + 1 && id < t.parent[static_cast<std::size_t>(v)]) {
          t.parent[static_cast<std::size_t>(v)] = id;  // canonical tie-break
        }
      }
    }
    return t;
  }

  using Item = std::pair<Dist, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  for (Vertex r : roots) {
    t.dist[static_cast<std::size_t>(r)] = 0;
    pq.push({0, r});
  }
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (du != t.dist[static_cast<std::size_t>(u)]) continue;
    for (EdgeId id : scan(u)) {
      Vertex v = head(id);
      Dist cand = du + g.edge(id).weight;
      if (cand > cap) continue;
      Dist& dv = t.dist[static_cast<std::size_t>(v)];
      if (cand < dv) {
        dv = cand;
        t.parent[static_cast<std::size_t>(v)] = id;
        pq.push({cand, v});
      } else if (cand == dv && dv < kInfDist && g.edge(id).weight > 0 &&
                 id < t.parent[static_cast<std::size_t>(v)]) {
        // Equal-distance rewiring is safe only across a positive-weight edge;
        // rewiring along zero-weight edges could close a parent cycle.
        t.parent[static_cast<std::size_t>(v)] = id;
      }
    }
  }
  return t;
}

// Depth of a tree that is required to reach every vertex.
inline Dist tree_depth(const ShortestPathTree& t) {
  if (!t.reaches_all())
    throw NotStronglyConnectedError(
        std::string("tree_depth: ") + direction_name(t.direction) +
        "-tree does not reach every vertex");
  return t.depth_reached();
}

// All vertices reachable from x in the given direction, sorted by
// (distance, vertex id) ascending. The ordering includes x itself first.
inline std::vector<Vertex> closest_order(const DirectedGraph& g, Vertex x, Direction dir) {
  ShortestPathTree t = sssp(g, {x}, dir);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (t.dist[static_cast<std::size_t>(v)] < kInfDist) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return t.dist[static_cast<std::size_t>(a)] < t.dist[static_cast<std::size_t>(b)];
  });
  return order;  // within one distance class, ids ascend (stable sort)
}

// The min(count, reachable) closest vertices to x, as a sorted-by-id set.
// Direction::In yields the classic "closest incoming" neighborhood of x;
// x itself is always a member (distance 0).
inline std::vector<Vertex> closest_set(const DirectedGraph& g, Vertex x, std::int64_t count,
                                       Direction dir) {
  if (count < 0) throw std::invalid_argument("closest_set: negative count");
  std::vector<Vertex> order = closest_order(g, x, dir);
  if (static_cast<std::int64_t>(order.size()) > count) order.resize(static_cast<std::size_t>(count));
  std::sort(order.begin(), order.end());
  return order;
}

inline bool is_strongly_connected(const DirectedGraph& g) {
  if (g.num_vertices() <= 1) return true;
  return sssp(g, {0}, Direction::Out).reaches_all() &&
         sssp(g, {0}, Direction::In).reaches_all();
}

struct DiameterEstimate {
  Dist lower = 0;  // max of the two pivot eccentricities
  Dist upper = 0;  // their sum; diam(G) lies in [lower, upper] <= [lower, 2*lower]
  Vertex pivot = 0;
};

// Two searches from a fixed pivot (vertex 0). Requires strong connectivity.
inline DiameterEstimate diameter_2approx(const DirectedGraph& g) {
  DiameterEstimate est;
  if (g.num_vertices() == 0) return est;
  ShortestPathTree out = sssp(g, {0}, Direction::Out);
  ShortestPathTree in = sssp(g, {0}, Direction::In);
  if (!out.reaches_all() || !in.reaches_all())
    throw NotStronglyConnectedError("diameter_2approx: graph is not strongly connected");
  Dist d_out = out.depth_reached();
  Dist d_in = in.depth_reached();
  est.lower = std::max(d_out, d_in);
  est.upper = d_out + d_in;
  est.pivot = 0;
  return est;
}

}  // namespace xds
