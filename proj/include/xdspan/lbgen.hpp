#pragma once

// Adversarial graph families with known extremal-distance behavior. Each
// generator returns the graph plus a landmark map from canonical names
// ("a:k:i", "b:i", ...) to vertex ids so tests and tools can address the
// structurally interesting vertices without re-deriving the id layout.
//
// Families (parameters t >= 1, N >= 1; indices in names follow the
// construction: chains a/d are 1-based levels, lb53 chains are 0-based):
//
//   lb15   n = N*(2t+2), diameter exactly 2t+2. Deleting any of the N^2
//          bipartite edges (b:i, c:j) forces d(a:1:i, d:t:j) = 3t+2, so any
//          subgraph with diameter <= 3t+1 keeps all N^2 of them.
//
//   lbecc  same graph as lb15; the sources "b:i" all have out-eccentricity
//          exactly t+1, and deleting (b:i, c:j) forces d(b:i, d:t:j) = 2t+2.
//
//   lb53   n = 3*N^2*(t+1), diameter at most 3t+3. For index quadruples
//          (ix, jx, iy, jy) with ix != iy, jx != jy, deleting the triple
//          (a:t:ix:jx -> b:0:iy:jx), (a:t:ix:jx -> a:0:iy:jx),
//          (b:t:iy:jx -> c:0:iy:jy) forces d(a:0:ix:jx, c:t:iy:jy) = 5t+4.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "xdspan/graph.hpp"

namespace xds {

enum class LbFamily { Lb15, LbEcc, Lb53 };

inline const char* lb_family_name(LbFamily f) {
  switch (f) {
    case LbFamily::Lb15: return "lb15";
    case LbFamily::LbEcc: return "lbecc";
    case LbFamily::Lb53: return "lb53";
  }
  return "?";
}

struct LbGraph {
  DirectedGraph graph;
  std::map<std::string, Vertex> landmarks;
  LbFamily family = LbFamily::Lb15;
  int t = 0;
  int N = 0;
  std::vector<std::string> warnings;  // e.g. edge budget exceeded

  Vertex at(const std::string& name) const {
    auto it = landmarks.find(name);
    if (it == landmarks.end()) throw std::out_of_range("no landmark named " + name);
    return it->second;
  }
};

inline constexpr std::int64_t kDefaultLbEdgeBudget = 10'000'000;

namespace detail {

inline void check_lb_params(int t, int N) {
  if (t < 1 || N < 1) throw std::invalid_argument("lb generator needs t >= 1 and N >= 1");
}

inline void check_edge_budget(LbGraph& lb, std::int64_t budget) {
  if (lb.graph.num_edges() > budget)
    lb.warnings.push_back("edge count " + std::to_string(lb.graph.num_edges()) +
                          " exceeds budget " + std::to_string(budget));
}

}  // namespace detail

// Four vertex classes laid out class-major, index-lexicographic:
//   a:k:i  (k in 1..t, i in 1..N)   ids 0 .. tN-1
//   b:i                              ids tN .. tN+N-1
//   c:j                              ids tN+N .. tN+2N-1
//   d:k:j  (k in 1..t, j in 1..N)   ids tN+2N .. n-1
inline LbGraph gen_lb15(int t, int N, std::int64_t edge_budget = kDefaultLbEdgeBudget) {
  detail::check_lb_params(t, N);
  LbGraph lb;
  lb.family = LbFamily::Lb15;
  lb.t = t;
  lb.N = N;
  auto a_id = [&](int k, int i) { return static_cast<Vertex>((k - 1) * N + (i - 1)); };
  auto b_id = [&](int i) { return static_cast<Vertex>(t * N + (i - 1)); };
  auto c_id = [&](int j) { return static_cast<Vertex>(t * N + N + (j - 1)); };
  auto d_id = [&](int k, int j) { return static_cast<Vertex>(t * N + 2 * N + (k - 1) * N + (j - 1)); };
  Vertex n = static_cast<Vertex>(N * (2 * t + 2));

  for (int k = 1; k <= t; ++k)
    for (int i = 1; i <= N; ++i) {
      lb.landmarks["a:" + std::to_string(k) + ":" + std::to_string(i)] = a_id(k, i);
      lb.landmarks["d:" + std::to_string(k) + ":" + std::to_string(i)] = d_id(k, i);
    }
  for (int i = 1; i <= N; ++i) {
    lb.landmarks["b:" + std::to_string(i)] = b_id(i);
    lb.landmarks["c:" + std::to_string(i)] = c_id(i);
  }

  std::vector<Edge> edges;
  // (i) each a:k:i chains forward, ending in b:i
  for (int i = 1; i <= N; ++i) {
    for (int k = 1; k < t; ++k) edges.push_back({a_id(k, i), a_id(k + 1, i), 1});
    edges.push_back({a_id(t, i), b_id(i), 1});
  }
  // (ii) complete bipartite B x C
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) edges.push_back({b_id(i), c_id(j), 1});
  // (iii) each d:k:j chains from c:j
  for (int j = 1; j <= N; ++j) {
    edges.push_back({c_id(j), d_id(1, j), 1});
    for (int k = 1; k < t; ++k) edges.push_back({d_id(k, j), d_id(k + 1, j), 1});
  }
  // (iv) everything in B, C, D re-enters every chain head a:1:i
  for (int i = 1; i <= N; ++i) {
    for (int x = 1; x <= N; ++x) {
      edges.push_back({b_id(x), a_id(1, i), 1});
      edges.push_back({c_id(x), a_id(1, i), 1});
      for (int k = 1; k <= t; ++k) edges.push_back({d_id(k, x), a_id(1, i), 1});
    }
  }
  lb.graph = DirectedGraph(n, std::move(edges), false);
  detail::check_edge_budget(lb, edge_budget);
  return lb;
}

// Identical graph to gen_lb15; only the family tag differs. The interesting
// source set for eccentricity experiments is { b:i }.
inline LbGraph gen_lb_ecc(int t, int N, std::int64_t edge_budget = kDefaultLbEdgeBudget) {
  LbGraph lb = gen_lb15(t, N, edge_budget);
  lb.family = LbFamily::LbEcc;
  return lb;
}

// Three vertex classes a, b, c, each a (t+1)-level grid of N*N chains:
//   a:k:i:j  (k in 0..t, i,j in 1..N)  ids k*N^2 + (i-1)*N + (j-1)
//   b:k:i:j  same layout, offset N^2*(t+1)
//   c:k:i:j  same layout, offset 2*N^2*(t+1)
inline LbGraph gen_lb53(int t, int N, std::int64_t edge_budget = kDefaultLbEdgeBudget) {
  detail::check_lb_params(t, N);
  LbGraph lb;
  lb.family = LbFamily::Lb53;
  lb.t = t;
  lb.N = N;
  const std::int64_t block = static_cast<std::int64_t>(N) * N * (t + 1);
  auto idx = [&](int k, int i, int j) {
    return static_cast<std::int64_t>(k) * N * N + static_cast<std::int64_t>(i - 1) * N + (j - 1);
  };
  auto a_id = [&](int k, int i, int j) { return static_cast<Vertex>(idx(k, i, j)); };
  auto b_id = [&](int k, int i, int j) { return static_cast<Vertex>(block + idx(k, i, j)); };
  auto c_id = [&](int k, int i, int j) { return static_cast<Vertex>(2 * block + idx(k, i, j)); };
  Vertex n = static_cast<Vertex>(3 * block);

  for (int k = 0; k <= t; ++k)
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        std::string suffix = std::to_string(k) + ":" + std::to_string(i) + ":" + std::to_string(j);
        lb.landmarks["a:" + suffix] = a_id(k, i, j);
        lb.landmarks["b:" + suffix] = b_id(k, i, j);
        lb.landmarks["c:" + suffix] = c_id(k, i, j);
      }

  std::vector<Edge> edges;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      // (i)-(iii) the three chain families
      for (int k = 0; k < t; ++k) {
        edges.push_back({a_id(k, i, j), a_id(k + 1, i, j), 1});
        edges.push_back({b_id(k, i, j), b_id(k + 1, i, j), 1});
        edges.push_back({c_id(k, i, j), c_id(k + 1, i, j), 1});
      }
      for (int x = 1; x <= N; ++x) {
        // (iv) a:t:i:j -> b:0:x:j for every x
        edges.push_back({a_id(t, i, j), b_id(0, x, j), 1});
        // (v) b:t:i:j -> c:0:i:x for every x
        edges.push_back({b_id(t, i, j), c_id(0, i, x), 1});
        // (vi) a:t:i:j -> a:0:x:j for every x
        edges.push_back({a_id(t, i, j), a_id(0, x, j), 1});
      }
      // (vii) b:t:i:j -> b:0:i':j' whenever i'=i or j'=j
      // (viii) b:t:i:j and every c:k:i:j -> a:0:i':j' whenever i'=i or j'=j
      for (int ii = 1; ii <= N; ++ii)
        for (int jj = 1; jj <= N; ++jj) {
          if (ii != i && jj != j) continue;
          edges.push_back({b_id(t, i, j), b_id(0, ii, jj), 1});
          edges.push_back({b_id(t, i, j), a_id(0, ii, jj), 1});
          for (int k = 0; k <= t; ++k)
            edges.push_back({c_id(k, i, j), a_id(0, ii, jj), 1});
        }
    }
  lb.graph = DirectedGraph(n, std::move(edges), false);
  detail::check_edge_budget(lb, edge_budget);
  return lb;
}

inline LbGraph gen_lb(LbFamily family, int t, int N,
                      std::int64_t edge_budget = kDefaultLbEdgeBudget) {
  switch (family) {
    case LbFamily::Lb15: return gen_lb15(t, N, edge_budget);
    case LbFamily::LbEcc: return gen_lb_ecc(t, N, edge_budget);
    case LbFamily::Lb53: return gen_lb53(t, N, edge_budget);
  }
  throw std::invalid_argument("unknown lb family");
}

}  // namespace xds
