#pragma once

// Eccentricity machinery. A k-level sampling cascade produces a small set S
// whose forward search covers every vertex within the radius (with high
// probability over the seed). From S we get a per-vertex 2-approximation of
// out-eccentricities and a spanner preserving them within factor 2:
//
//   level sets   B_k = V;  for i = k-1 .. 1:
//     A_i  = uniform subset of B_{i+1}, size ~8 n^{1/k} log n
//     a_i  = deepest vertex of the out-search from A_i
//     B_i  = the ceil(n^{i/k}) in-closest vertices of a_i inside B_{i+1}
//     (resample A_i while A_i and B_i are disjoint)
//   S = B_1 + A_1 + ... + A_{k-1}
//
//   OutEcc'(x) = max_{s in S} d(x, s) + depth(out-search from S)
//
// OutEcc(x) <= OutEcc'(x) always; OutEcc'(x) <= 2 OutEcc(x) whenever the
// cascade succeeded (depth(out-search from S) <= radius).

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "xdspan/domset.hpp"
#include "xdspan/spanner_types.hpp"
#include "xdspan/sssp.hpp"

namespace xds {

struct RadiusLevel {
  int level = 0;                // i, counting down from k-1
  std::vector<Vertex> a_set;    // sorted
  Vertex anchor = kNoVertex;    // a_i
  std::vector<Vertex> b_set;    // sorted
  int resamples = 0;
};

struct RadiusDominatingSet {
  std::vector<Vertex> s;  // sorted unique
  int k = 1;
  std::vector<RadiusLevel> levels;  // recorded from level k-1 down to 1
  std::uint64_t seed = 0;
};

// k == 0 picks the default ceil(log2 n). k == 1 degenerates to S = V.
inline RadiusDominatingSet radius_dominating_set(const DirectedGraph& g, int k,
                                                 const SamplerConfig& cfg) {
  Vertex n = g.num_vertices();
  if (n < 1) throw std::invalid_argument("radius_dominating_set: empty graph");
  if (k == 0) k = std::max(1, ceil_log2(n));
  if (k < 1) throw std::invalid_argument("radius_dominating_set: need k >= 1");
  if (!is_strongly_connected(g))
    throw NotStronglyConnectedError("radius_dominating_set: input must be strongly connected");

  RadiusDominatingSet result;
  result.k = k;
  result.seed = cfg.seed;
  std::int64_t log_n = std::max(1, ceil_log2(n));
  double root = std::pow(static_cast<double>(n), 1.0 / static_cast<double>(k));
  std::int64_t a_target = static_cast<std::int64_t>(
      std::ceil(8.0 * root * static_cast<double>(log_n) - 1e-9));

  Rng rng(cfg.seed);
  std::vector<Vertex> b(static_cast<std::size_t>(n));
  std::iota(b.begin(), b.end(), 0);  // B_k = V
  std::vector<Vertex> s_members;
  for (int i = k - 1; i >= 1; --i) {
    RadiusLevel lvl;
    lvl.level = i;
    std::int64_t b_target = static_cast<std::int64_t>(std::ceil(
        std::pow(static_cast<double>(n), static_cast<double>(i) / static_cast<double>(k)) -
        1e-9));
    std::int64_t a_size = std::min<std::int64_t>(a_target, static_cast<std::int64_t>(b.size()));
    for (int attempt = 0;; ++attempt) {
      if (attempt > cfg.max_resamples)
        throw ResampleLimitError("radius_dominating_set: level " + std::to_string(i) +
                                 " stayed disjoint after " + std::to_string(cfg.max_resamples) +
                                 " resamples");
      std::vector<Vertex> picks = rng.sample_vertices(static_cast<Vertex>(b.size()), a_size);
      lvl.a_set.clear();
      for (Vertex ix : picks) lvl.a_set.push_back(b[static_cast<std::size_t>(ix)]);
      std::sort(lvl.a_set.begin(), lvl.a_set.end());
      ShortestPathTree out_tree = sssp(g, lvl.a_set, Direction::Out);
      lvl.anchor = out_tree.deepest_vertex();
      // B_i: closest-in ordering of the anchor filtered to B_{i+1}
      std::vector<Vertex> order = closest_order(g, lvl.anchor, Direction::In);
      lvl.b_set.clear();
      for (Vertex v : order) {
        if (static_cast<std::int64_t>(lvl.b_set.size()) >= b_target) break;
        if (std::binary_search(b.begin(), b.end(), v)) lvl.b_set.push_back(v);
      }
      std::sort(lvl.b_set.begin(), lvl.b_set.end());
      std::vector<Vertex> meet;
      std::set_intersection(lvl.a_set.begin(), lvl.a_set.end(), lvl.b_set.begin(),
                            lvl.b_set.end(), std::back_inserter(meet));
      if (!meet.empty()) break;
      lvl.resamples = attempt + 1;
    }
    s_members.insert(s_members.end(), lvl.a_set.begin(), lvl.a_set.end());
    b = lvl.b_set;
    result.levels.push_back(lvl);
  }
  s_members.insert(s_members.end(), b.begin(), b.end());  // B_1 (or V when k == 1)
  std::sort(s_members.begin(), s_members.end());
  s_members.erase(std::unique(s_members.begin(), s_members.end()), s_members.end());
  result.s = std::move(s_members);
  return result;
}

// Union of both trees of every member of the radius-dominating set.
// Preserves every out-eccentricity within factor 2.
inline SpannerResult ecc2_spanner(const DirectedGraph& g, const SamplerConfig& cfg, int k = 0) {
  SpannerResult r;
  r.kind = SpannerKind::Ecc2;
  r.claim = {Frac(2, 1), 0, false, StretchScope::PerVertexEcc};
  r.audit.seed = cfg.seed;
  if (g.num_vertices() <= 1) {
    for (EdgeId id = 0; id < g.num_edges(); ++id) r.edges.push_back(id);
    return r;
  }
  RadiusDominatingSet rds = radius_dominating_set(g, k, cfg);
  std::vector<bool> member(static_cast<std::size_t>(g.num_edges()), false);
  for (Vertex s : rds.s) {
    for (Direction dir : {Direction::Out, Direction::In}) {
      ShortestPathTree t = sssp(g, {s}, dir);
      for (EdgeId id : t.parent)
        if (id != kNoEdge) member[static_cast<std::size_t>(id)] = true;
    }
  }
  for (EdgeId id = 0; id < g.num_edges(); ++id)
    if (member[static_cast<std::size_t>(id)]) r.edges.push_back(id);
  r.audit.n_p = static_cast<std::int64_t>(rds.s.size());
  r.audit.branch = "k=" + std::to_string(rds.k);
  return r;
}

struct EccEstimates {
  std::vector<Dist> out_ecc;  // per-vertex upper estimate
  std::vector<Vertex> s;      // the sample behind the estimate
  Dist depth_s = 0;           // depth of the forward search from S
  int k = 1;
  std::uint64_t seed = 0;
};

// Per-vertex out-eccentricity estimates from |S| backward searches plus one
// forward search. Estimates never undershoot; they overshoot by at most
// factor 2 when the cascade landed (checked against the oracle in tests).
inline EccEstimates approx_eccentricities(const DirectedGraph& g, const SamplerConfig& cfg,
                                          int k = 0) {
  Vertex n = g.num_vertices();
  EccEstimates est;
  est.seed = cfg.seed;
  if (n == 0) return est;
  if (n == 1) {
    est.out_ecc = {0};
    est.s = {0};
    return est;
  }
  RadiusDominatingSet rds = radius_dominating_set(g, k, cfg);
  est.s = rds.s;
  est.k = rds.k;
  est.depth_s = tree_depth(sssp(g, rds.s, Direction::Out));
  est.out_ecc.assign(static_cast<std::size_t>(n), 0);
  for (Vertex s : rds.s) {
    ShortestPathTree in_tree = sssp(g, {s}, Direction::In);
    for (Vertex x = 0; x < n; ++x) {
      Dist d = in_tree.dist[static_cast<std::size_t>(x)];
      if (d > est.out_ecc[static_cast<std::size_t>(x)]) est.out_ecc[static_cast<std::size_t>(x)] = d;
    }
  }
  for (Vertex x = 0; x < n; ++x) est.out_ecc[static_cast<std::size_t>(x)] += est.depth_s;
  return est;
}

}  // namespace xds
