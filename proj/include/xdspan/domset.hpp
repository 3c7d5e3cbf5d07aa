#pragma once

// Dominating set-pairs. A pair (S1, S2) with parameters p + q = 1 certifies
// one of two coverage facts about a strongly connected graph:
//
//   OUT:  every vertex is within floor(p * InEcc(a)) of S1 going forward,
//   IN:   every vertex reaches S2 within ceil(q * InEcc(a)) (+W if weighted),
//
// where a is the vertex that maximizes d(S1, .) and W the maximum edge
// weight. S1 is a uniform sample; S2 is the in-closest neighborhood of a.
// Since InEcc(a) <= diam(G), whichever branch fires bounds coverage by
// p*diam or q*diam. The disjunction is deterministic; sampling only has to
// make S1 and S2 intersect, which drives the resample loop.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "xdspan/sssp.hpp"

namespace xds {

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::int64_t oversample_c = 8;  // the constant c in n_p * n_q >= c * n * log2(n)
  int max_resamples = 64;
};

// Smallest balanced size: ceil(sqrt(c * n * ceil(log2 n))), capped at n.
inline std::int64_t default_pair_size(Vertex n, std::int64_t oversample_c = 8) {
  if (n <= 1) return n;
  std::int64_t target = oversample_c * n * ceil_log2(n);
  std::int64_t s = 1;
  while (s * s < target) ++s;
  return std::min<std::int64_t>(s, n);
}

// n_p * n_q must cover the oversampling product unless one side already
// covers the whole vertex set (sizes are capped at n).
inline void validate_pair_sizes(Vertex n, std::int64_t n_p, std::int64_t n_q,
                                std::int64_t oversample_c) {
  if (n_p < 1 || n_q < 1) throw std::invalid_argument("pair sizes must be >= 1");
  if (n_p >= n || n_q >= n) return;
  if (n_p * n_q < oversample_c * n * ceil_log2(n))
    throw std::invalid_argument("pair sizes " + std::to_string(n_p) + "*" + std::to_string(n_q) +
                                " below oversampling product for n=" + std::to_string(n));
}

// Uniform random vertex sample of size min(n_p, n), sorted ascending.
inline std::vector<Vertex> sample_hitting_set(const DirectedGraph& g, std::int64_t n_p,
                                              std::int64_t n_q, const SamplerConfig& cfg) {
  validate_pair_sizes(g.num_vertices(), n_p, n_q, cfg.oversample_c);
  Rng rng(cfg.seed);
  return rng.sample_vertices(g.num_vertices(), n_p);
}

enum class DomCert { OutDominates, InDominates };

inline const char* dom_cert_name(DomCert c) {
  return c == DomCert::OutDominates ? "out_dominates" : "in_dominates";
}

struct DominatingPair {
  std::vector<Vertex> s1;  // sorted
  std::vector<Vertex> s2;  // sorted
  Vertex anchor = kNoVertex;
  Dist in_ecc_anchor = 0;  // InEcc(anchor) at construction time
  Frac p{1, 2};
  Frac q{1, 2};
  DomCert cert = DomCert::OutDominates;
  Dist bound = 0;      // the certified coverage radius h
  Dist out_depth = 0;  // realized depth of the out-search from S1
  Dist in_depth = 0;   // realized depth of the in-search from S2
  Weight max_weight = 0;
  int resamples = 0;
  std::uint64_t seed = 0;
};

inline Weight max_edge_weight(const DirectedGraph& g) {
  Weight w = 0;
  if (!g.weighted()) return 0;
  for (const Edge& e : g.edges()) w = std::max(w, e.weight);
  return w;
}

// Builds the pair on a strongly connected graph. p + q must equal 1.
inline DominatingPair dominating_pair(const DirectedGraph& g, Frac p, Frac q, std::int64_t n_p,
                                      std::int64_t n_q, const SamplerConfig& cfg) {
  if (p.num * q.den + q.num * p.den != p.den * q.den)
    throw std::invalid_argument("dominating_pair: p + q must equal 1");
  Vertex n = g.num_vertices();
  if (n < 1) throw std::invalid_argument("dominating_pair: empty graph");
  validate_pair_sizes(n, n_p, n_q, cfg.oversample_c);
  if (!is_strongly_connected(g))
    throw NotStronglyConnectedError("dominating_pair: input must be strongly connected");

  DominatingPair pair;
  pair.p = p;
  pair.q = q;
  pair.seed = cfg.seed;
  pair.max_weight = g.weighted() ? max_edge_weight(g) : 0;
  Rng rng(cfg.seed);
  ShortestPathTree out_tree;
  for (int attempt = 0;; ++attempt) {
    if (attempt > cfg.max_resamples)
      throw ResampleLimitError("dominating_pair: S1 and S2 stayed disjoint after " +
                               std::to_string(cfg.max_resamples) + " resamples");
    pair.s1 = rng.sample_vertices(n, n_p);
    out_tree = sssp(g, pair.s1, Direction::Out);
    pair.anchor = out_tree.deepest_vertex();
    pair.s2 = closest_set(g, pair.anchor, n_q, Direction::In);
    std::vector<Vertex> meet;
    std::set_intersection(pair.s1.begin(), pair.s1.end(), pair.s2.begin(), pair.s2.end(),
                          std::back_inserter(meet));
    if (!meet.empty()) break;
    pair.resamples = attempt + 1;
  }
  pair.out_depth = tree_depth(out_tree);
  pair.in_ecc_anchor = tree_depth(sssp(g, {pair.anchor}, Direction::In));
  pair.in_depth = tree_depth(sssp(g, pair.s2, Direction::In));
  Dist h1 = p.mul_floor(pair.in_ecc_anchor);
  if (pair.out_depth <= h1) {
    pair.cert = DomCert::OutDominates;
    pair.bound = h1;
  } else {
    pair.cert = DomCert::InDominates;
    pair.bound = q.mul_ceil(pair.in_ecc_anchor) + pair.max_weight;
  }
  return pair;
}

// Re-derived coverage facts for a claimed pair, judged at effective
// parameters (p_eff, q_eff); slack-widened parameters let the same check
// serve the dynamic maintainers.
struct DominationAudit {
  Dist out_depth = 0;       // depth of out-search from s1 (kInfDist if it misses vertices)
  Dist in_depth = 0;        // depth of in-search from s2
  Dist in_ecc_anchor = 0;   // current InEcc(anchor)
  Dist h1 = 0;              // floor(p_eff * InEcc(anchor))
  Dist h2 = 0;              // ceil(q_eff * InEcc(anchor)) + W
  bool out_holds = false;   // out_depth <= h1
  bool in_holds = false;    // in_depth <= h2
  bool disjunction_holds = false;
};

inline DominationAudit verify_domination(const DirectedGraph& g, const std::vector<Vertex>& s1,
                                         const std::vector<Vertex>& s2, Vertex anchor, Frac p_eff,
                                         Frac q_eff) {
  DominationAudit audit;
  ShortestPathTree out_tree = sssp(g, s1, Direction::Out);
  ShortestPathTree in_tree = sssp(g, s2, Direction::In);
  ShortestPathTree anchor_tree = sssp(g, {anchor}, Direction::In);
  audit.out_depth = out_tree.reaches_all() ? out_tree.depth_reached() : kInfDist;
  audit.in_depth = in_tree.reaches_all() ? in_tree.depth_reached() : kInfDist;
  audit.in_ecc_anchor = anchor_tree.reaches_all() ? anchor_tree.depth_reached() : kInfDist;
  if (audit.in_ecc_anchor >= kInfDist) return audit;  // nothing holds
  audit.h1 = p_eff.mul_floor(audit.in_ecc_anchor);
  audit.h2 = q_eff.mul_ceil(audit.in_ecc_anchor) + max_edge_weight(g);
  audit.out_holds = audit.out_depth <= audit.h1;
  audit.in_holds = audit.in_depth <= audit.h2;
  audit.disjunction_holds = audit.out_holds || audit.in_holds;
  return audit;
}

inline DominationAudit verify_domination(const DirectedGraph& g, const DominatingPair& pair) {
  return verify_domination(g, pair.s1, pair.s2, pair.anchor, pair.p, pair.q);
}

}  // namespace xds
