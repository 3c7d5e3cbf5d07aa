#pragma once

// Seeded random strongly connected digraphs and update streams over them.
// Construction: a Hamiltonian cycle through a random permutation (the
// backbone) plus uniformly random extra edges. Delete streams only ever
// remove non-backbone edges, so every prefix of the stream leaves the graph
// strongly connected; insert streams only add edges, which preserves strong
// connectivity trivially.

#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "xdspan/graph.hpp"
#include "xdspan/io.hpp"

namespace xds {

struct RandomGraph {
  DirectedGraph graph;
  std::vector<std::pair<Vertex, Vertex>> backbone;  // the protected cycle edges
};

// n >= 1; m counts total edges and must fit in [n, n*(n-1)] for n >= 2
// (the backbone alone uses n edges). max_weight == 1 yields an unweighted
// graph; otherwise weights are uniform in 1..max_weight.
inline RandomGraph random_scc_graph(Vertex n, std::int64_t m, std::uint64_t seed,
                                    Weight max_weight = 1) {
  if (n < 1) throw std::invalid_argument("random_scc_graph: need n >= 1");
  std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1);
  if (n >= 2 && (m < n || m > max_m))
    throw std::invalid_argument("random_scc_graph: need n <= m <= n*(n-1)");
  Rng rng(seed);
  RandomGraph rg;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (Vertex i = n - 1; i > 0; --i) {
    std::uint64_t j = rng.below(static_cast<std::uint64_t>(i) + 1);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  auto key = [n](Vertex u, Vertex v) {
    return static_cast<std::int64_t>(u) * n + v;
  };
  std::unordered_set<std::int64_t> present;
  std::vector<Edge> edges;
  auto weight = [&]() -> Weight {
    return max_weight <= 1 ? 1 : 1 + static_cast<Weight>(rng.below(static_cast<std::uint64_t>(max_weight)));
  };
  if (n >= 2) {
    for (Vertex i = 0; i < n; ++i) {
      Vertex u = perm[static_cast<std::size_t>(i)];
      Vertex v = perm[static_cast<std::size_t>((i + 1) % n)];
      edges.push_back({u, v, weight()});
      present.insert(key(u, v));
      rg.backbone.emplace_back(u, v);
    }
  }
  while (static_cast<std::int64_t>(edges.size()) < m) {
    Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v || present.count(key(u, v))) continue;
    edges.push_back({u, v, weight()});
    present.insert(key(u, v));
  }
  rg.graph = DirectedGraph(n, std::move(edges), max_weight > 1);
  return rg;
}

// ops deletions of distinct non-backbone edges, in random order.
inline std::vector<UpdateOp> make_delete_stream(const RandomGraph& rg, std::int64_t ops,
                                                std::uint64_t seed) {
  std::unordered_set<std::int64_t> protected_keys;
  Vertex n = rg.graph.num_vertices();
  for (auto [u, v] : rg.backbone)
    protected_keys.insert(static_cast<std::int64_t>(u) * n + v);
  std::vector<UpdateOp> candidates;
  for (const Edge& e : rg.graph.edges())
    if (!protected_keys.count(static_cast<std::int64_t>(e.from) * n + e.to))
      candidates.push_back({false, e.from, e.to});
  if (static_cast<std::int64_t>(candidates.size()) < ops)
    throw std::invalid_argument("make_delete_stream: only " + std::to_string(candidates.size()) +
                                " deletable edges for " + std::to_string(ops) + " ops");
  Rng rng(seed);
  for (std::size_t i = candidates.size() - 1; i > 0; --i) {
    std::uint64_t j = rng.below(static_cast<std::uint64_t>(i) + 1);
    std::swap(candidates[i], candidates[static_cast<std::size_t>(j)]);
  }
  candidates.resize(static_cast<std::size_t>(ops));
  return candidates;
}

// ops insertions of distinct edges absent from the base graph.
inline std::vector<UpdateOp> make_insert_stream(const DirectedGraph& base, std::int64_t ops,
                                                std::uint64_t seed) {
  Vertex n = base.num_vertices();
  std::int64_t free_slots = static_cast<std::int64_t>(n) * (n - 1) - base.num_edges();
  if (free_slots < ops)
    throw std::invalid_argument("make_insert_stream: only " + std::to_string(free_slots) +
                                " absent edges for " + std::to_string(ops) + " ops");
  std::unordered_set<std::int64_t> present;
  for (const Edge& e : base.edges())
    present.insert(static_cast<std::int64_t>(e.from) * n + e.to);
  Rng rng(seed);
  std::vector<UpdateOp> out;
  while (static_cast<std::int64_t>(out.size()) < ops) {
    Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    std::int64_t k = static_cast<std::int64_t>(u) * n + v;
    if (u == v || present.count(k)) continue;
    present.insert(k);
    out.push_back({true, u, v});
  }
  return out;
}

}  // namespace xds
