#pragma once

// Static extremal-distance spanners. Every construction returns a subset of
// the input's edge ids built from shortest-path trees (so subgraph distances
// along kept routes are exact), plus a symbolic stretch claim:
//
//   diam15    ceil(1.5 * diam)            (weighted: 1.5 * diam + W)
//   diam53    ceil(5/3 * diam)            (weighted: 5/3 * diam + W, experimental)
//   tradeoff  ceil((1+p) * diam) or ceil((1+r) * diam) + [W], by certificate
//   additive  diam + ceil(n/d)            (unweighted only)
//
// All randomness flows through SamplerConfig seeds; identical seeds give
// identical spanners.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "xdspan/domset.hpp"
#include "xdspan/spanner_types.hpp"
#include "xdspan/sssp.hpp"

namespace xds {

namespace detail {

class EdgeSetBuilder {
 public:
  explicit EdgeSetBuilder(const DirectedGraph& g)
      : member_(static_cast<std::size_t>(g.num_edges()), false) {}

  void add_tree(const ShortestPathTree& t) {
    for (EdgeId id : t.parent)
      if (id != kNoEdge) member_[static_cast<std::size_t>(id)] = true;
  }
  void add_edges(const std::vector<EdgeId>& ids) {
    for (EdgeId id : ids) member_[static_cast<std::size_t>(id)] = true;
  }
  void add_both_trees(const DirectedGraph& g, Vertex s) {
    add_tree(sssp(g, {s}, Direction::Out));
    add_tree(sssp(g, {s}, Direction::In));
  }

  std::vector<EdgeId> take() const {
    std::vector<EdgeId> out;
    for (EdgeId id = 0; id < static_cast<EdgeId>(member_.size()); ++id)
      if (member_[static_cast<std::size_t>(id)]) out.push_back(id);
    return out;
  }

 private:
  std::vector<bool> member_;
};

inline std::vector<Vertex> sorted_union(const std::vector<Vertex>& a,
                                        const std::vector<Vertex>& b) {
  std::vector<Vertex> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

inline SpannerResult trivial_spanner(const DirectedGraph& g, SpannerKind kind,
                                     const SamplerConfig& cfg) {
  SpannerResult r;
  r.kind = kind;
  r.audit.seed = cfg.seed;
  for (EdgeId id = 0; id < g.num_edges(); ++id) r.edges.push_back(id);
  r.audit.notes.push_back("graph below nontrivial size; kept all edges");
  return r;
}

}  // namespace detail

// Union of in- and out-trees of every member of a balanced 1/2-1/2
// dominating pair. n_p or n_q of 0 mean "use the default size".
inline SpannerResult diam15_spanner(const DirectedGraph& g, const SamplerConfig& cfg,
                                    std::int64_t n_p = 0, std::int64_t n_q = 0) {
  if (g.num_vertices() <= 1) {
    SpannerResult r = detail::trivial_spanner(g, SpannerKind::Diam15, cfg);
    r.claim = {Frac(3, 2), 0, true, StretchScope::Diameter};
    return r;
  }
  if (n_p == 0) n_p = default_pair_size(g.num_vertices(), cfg.oversample_c);
  if (n_q == 0) n_q = default_pair_size(g.num_vertices(), cfg.oversample_c);
  DominatingPair pair = dominating_pair(g, Frac(1, 2), Frac(1, 2), n_p, n_q, cfg);
  detail::EdgeSetBuilder builder(g);
  for (Vertex s : detail::sorted_union(pair.s1, pair.s2)) builder.add_both_trees(g, s);
  SpannerResult r;
  r.kind = SpannerKind::Diam15;
  r.edges = builder.take();
  if (g.weighted())
    r.claim = {Frac(3, 2), pair.max_weight, false, StretchScope::Diameter};
  else
    r.claim = {Frac(3, 2), 0, true, StretchScope::Diameter};
  r.audit.seed = cfg.seed;
  r.audit.n_p = n_p;
  r.audit.n_q = n_q;
  r.audit.resamples = pair.resamples;
  r.audit.branch = dom_cert_name(pair.cert);
  return r;
}

// Trees of S1 when the pair is out-dominating, trees of S2 otherwise.
// p + r must equal 1; the claim follows the branch that fired.
inline SpannerResult tradeoff_spanner(const DirectedGraph& g, Frac p, Frac r_frac,
                                      const SamplerConfig& cfg, std::int64_t n_p = 0,
                                      std::int64_t n_r = 0) {
  if (g.num_vertices() <= 1) {
    SpannerResult r = detail::trivial_spanner(g, SpannerKind::Tradeoff, cfg);
    r.claim = {Frac(p.den + p.num, p.den), 0, true, StretchScope::Diameter};
    return r;
  }
  if (n_p == 0) n_p = default_pair_size(g.num_vertices(), cfg.oversample_c);
  if (n_r == 0) n_r = default_pair_size(g.num_vertices(), cfg.oversample_c);
  DominatingPair pair = dominating_pair(g, p, r_frac, n_p, n_r, cfg);
  detail::EdgeSetBuilder builder(g);
  SpannerResult r;
  r.kind = SpannerKind::Tradeoff;
  if (pair.cert == DomCert::OutDominates) {
    for (Vertex s : pair.s1) builder.add_both_trees(g, s);
    r.claim = {Frac(p.den + p.num, p.den), 0, true, StretchScope::Diameter};
  } else {
    for (Vertex s : pair.s2) builder.add_both_trees(g, s);
    r.claim = {Frac(r_frac.den + r_frac.num, r_frac.den),
               g.weighted() ? pair.max_weight : 0, true, StretchScope::Diameter};
  }
  r.edges = builder.take();
  r.audit.seed = cfg.seed;
  r.audit.n_p = n_p;
  r.audit.n_q = n_r;
  r.audit.resamples = pair.resamples;
  r.audit.branch = dom_cert_name(pair.cert);
  return r;
}

// The 5/3 construction: two asymmetric pairs plus exact paths between the
// anchor neighborhoods.
//   (A1, A2): sampled alpha*log(n), neighborhood n-ish/alpha, p = 2/3
//   (B1, B2): sampled n-ish/alpha, neighborhood alpha*log(n), p = 1/3
// H = in-tree(A2 as super-source) + out-tree(B1 as super-source)
//   + both trees per s in A1 and B2 + one exact path per (u, v) in A2 x B1.
inline SpannerResult diam53_spanner(const DirectedGraph& g, const SamplerConfig& cfg) {
  if (g.num_vertices() <= 1) {
    SpannerResult r = detail::trivial_spanner(g, SpannerKind::Diam53, cfg);
    r.claim = {Frac(5, 3), 0, true, StretchScope::Diameter};
    return r;
  }
  Vertex n = g.num_vertices();
  std::int64_t log_n = std::max(1, ceil_log2(n));
  DiameterEstimate est = diameter_2approx(g);
  double alpha_real = std::cbrt(static_cast<double>(n) *
                                static_cast<double>(std::max<Dist>(est.upper, 1)) /
                                static_cast<double>(log_n));
  std::int64_t alpha = std::clamp<std::int64_t>(static_cast<std::int64_t>(std::ceil(alpha_real)),
                                                1, n);
  std::int64_t small = std::min<std::int64_t>(n, alpha * log_n);
  std::int64_t big =
      std::min<std::int64_t>(n, (cfg.oversample_c * n * log_n + small - 1) / small);

  SamplerConfig cfg_a = cfg;
  SamplerConfig cfg_b = cfg;
  cfg_b.seed = cfg.seed + 0x9e3779b97f4a7c15ULL;
  DominatingPair pa = dominating_pair(g, Frac(2, 3), Frac(1, 3), small, big, cfg_a);
  DominatingPair pb = dominating_pair(g, Frac(1, 3), Frac(2, 3), big, small, cfg_b);

  detail::EdgeSetBuilder builder(g);
  builder.add_tree(sssp(g, pa.s2, Direction::In));
  builder.add_tree(sssp(g, pb.s1, Direction::Out));
  for (Vertex s : detail::sorted_union(pa.s1, pb.s2)) builder.add_both_trees(g, s);
  for (Vertex u : pa.s2) {
    ShortestPathTree from_u = sssp(g, {u}, Direction::Out);
    for (Vertex v : pb.s1) builder.add_edges(from_u.path_edges(v, g));
  }

  SpannerResult r;
  r.kind = SpannerKind::Diam53;
  r.edges = builder.take();
  Weight w = std::max(pa.max_weight, pb.max_weight);
  if (g.weighted()) {
    r.claim = {Frac(5, 3), w, false, StretchScope::Diameter};
    r.audit.notes.push_back("weighted 5/3 guarantee is experimental");
  } else {
    r.claim = {Frac(5, 3), 0, true, StretchScope::Diameter};
  }
  r.audit.seed = cfg.seed;
  r.audit.n_p = small;
  r.audit.n_q = big;
  r.audit.resamples = pa.resamples + pb.resamples;
  std::string branch;
  if (pa.cert == DomCert::OutDominates) branch = "a_out";
  else if (pb.cert == DomCert::InDominates) branch = "b_in";
  else branch = "middle";
  r.audit.branch = branch;
  r.audit.notes.push_back("alpha=" + std::to_string(alpha));
  return r;
}

enum class AdditiveBranch { Auto, ForceTrees, ForcePreserver };

// Additive-stretch spanner: a hitting set S for every vertex's n/2d closest
// neighborhoods in both directions, super-source trees over S, then either
// per-source out-trees (small d) or a naive S x S path preserver (large d).
// Guarantee: diam(H) <= diam(G) + ceil(n/d). Unweighted graphs only.
inline SpannerResult additive_spanner(const DirectedGraph& g, std::int64_t d,
                                      const SamplerConfig& cfg,
                                      AdditiveBranch branch = AdditiveBranch::Auto) {
  if (g.weighted())
    throw std::invalid_argument("additive_spanner: weighted graphs are not supported");
  if (d < 1) throw std::invalid_argument("additive_spanner: need d >= 1");
  Vertex n = g.num_vertices();
  if (n <= 1) {
    SpannerResult r = detail::trivial_spanner(g, SpannerKind::Additive, cfg);
    r.claim = {Frac(1, 1), 0, false, StretchScope::Diameter};
    return r;
  }
  if (!is_strongly_connected(g))
    throw NotStronglyConnectedError("additive_spanner: input must be strongly connected");

  std::int64_t log_n = std::max(1, ceil_log2(n));
  std::int64_t s_count = std::min<std::int64_t>(n, 8 * d * log_n);
  std::int64_t radius_count = (n + 2 * d - 1) / (2 * d);  // ceil(n / 2d)

  // precompute each vertex's closest neighborhoods once; resampling reuses them
  std::vector<std::vector<Vertex>> near_out(static_cast<std::size_t>(n));
  std::vector<std::vector<Vertex>> near_in(static_cast<std::size_t>(n));
  for (Vertex w = 0; w < n; ++w) {
    near_out[static_cast<std::size_t>(w)] = closest_set(g, w, radius_count, Direction::Out);
    near_in[static_cast<std::size_t>(w)] = closest_set(g, w, radius_count, Direction::In);
  }
  auto hits = [](const std::vector<Vertex>& sorted_s, const std::vector<Vertex>& sorted_nbhd) {
    std::vector<Vertex> meet;
    std::set_intersection(sorted_s.begin(), sorted_s.end(), sorted_nbhd.begin(),
                          sorted_nbhd.end(), std::back_inserter(meet));
    return !meet.empty();
  };

  Rng rng(cfg.seed);
  std::vector<Vertex> s_set;
  int resamples = 0;
  for (int attempt = 0;; ++attempt) {
    if (attempt > cfg.max_resamples)
      throw ResampleLimitError("additive_spanner: no hitting set after " +
                               std::to_string(cfg.max_resamples) + " resamples");
    s_set = rng.sample_vertices(n, s_count);
    bool ok = true;
    for (Vertex w = 0; w < n && ok; ++w)
      ok = hits(s_set, near_out[static_cast<std::size_t>(w)]) &&
           hits(s_set, near_in[static_cast<std::size_t>(w)]);
    if (ok) break;
    resamples = attempt + 1;
  }

  detail::EdgeSetBuilder builder(g);
  builder.add_tree(sssp(g, s_set, Direction::In));
  builder.add_tree(sssp(g, s_set, Direction::Out));
  bool use_trees;
  switch (branch) {
    case AdditiveBranch::ForceTrees: use_trees = true; break;
    case AdditiveBranch::ForcePreserver: use_trees = false; break;
    default:
      use_trees = std::cbrt(static_cast<double>(n)) <= static_cast<double>(d * log_n);
  }
  if (use_trees) {
    for (Vertex s : s_set) builder.add_tree(sssp(g, {s}, Direction::Out));
  } else {
    for (Vertex u : s_set) {
      ShortestPathTree from_u = sssp(g, {u}, Direction::Out);
      for (Vertex v : s_set) builder.add_edges(from_u.path_edges(v, g));
    }
  }

  SpannerResult r;
  r.kind = SpannerKind::Additive;
  r.edges = builder.take();
  r.claim = {Frac(1, 1), (n + d - 1) / d, false, StretchScope::Diameter};
  r.audit.seed = cfg.seed;
  r.audit.n_p = s_count;
  r.audit.n_q = radius_count;
  r.audit.resamples = resamples;
  r.audit.branch = use_trees ? "source_trees" : "pairwise_preserver";
  return r;
}

}  // namespace xds
