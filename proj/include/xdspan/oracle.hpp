#pragma once

// Brute-force ground truth: all-pairs distances by n searches, exact
// eccentricities / diameter / radius, and the spanner audit that replays a
// claimed guarantee against those exact values. Deliberately simple; this is
// the reference every fast path is tested against.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "xdspan/spanner_types.hpp"
#include "xdspan/sssp.hpp"

namespace xds {

struct ExactMetrics {
  Vertex n = 0;
  bool strongly_connected = true;
  std::vector<std::vector<Dist>> dist;  // dist[u][v], kInfDist when unreachable
  std::vector<Dist> out_ecc;            // kInfDist when some target unreachable
  std::vector<Dist> in_ecc;
  Dist diameter = 0;  // kInfDist when not strongly connected
  Dist radius = 0;    // min over out_ecc
  Vertex center = kNoVertex;

  Dist d(Vertex u, Vertex v) const {
    return dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  }
};

inline constexpr Vertex kDefaultOracleCap = 2000;

// n full searches. Refuses graphs above the cap; the cap exists because every
// caller of this should be a test, an audit, or a small CLI verification.
inline ExactMetrics exact_metrics(const DirectedGraph& g, Vertex cap = kDefaultOracleCap) {
  if (g.num_vertices() > cap)
    throw std::invalid_argument("exact_metrics: graph exceeds oracle cap " + std::to_string(cap));
  ExactMetrics m;
  m.n = g.num_vertices();
  m.dist.resize(static_cast<std::size_t>(m.n));
  m.out_ecc.assign(static_cast<std::size_t>(m.n), 0);
  m.in_ecc.assign(static_cast<std::size_t>(m.n), 0);
  for (Vertex u = 0; u < m.n; ++u)
    m.dist[static_cast<std::size_t>(u)] = sssp(g, {u}, Direction::Out).dist;
  for (Vertex u = 0; u < m.n; ++u) {
    Dist worst = 0;
    for (Vertex v = 0; v < m.n; ++v) {
      Dist d = m.d(u, v);
      if (d > worst) worst = d;
      if (d >= kInfDist) m.strongly_connected = false;
      Dist& ie = m.in_ecc[static_cast<std::size_t>(v)];
      if (d > ie) ie = d;
    }
    m.out_ecc[static_cast<std::size_t>(u)] = worst >= kInfDist ? kInfDist : worst;
  }
  for (Vertex v = 0; v < m.n; ++v)
    if (m.in_ecc[static_cast<std::size_t>(v)] >= kInfDist)
      m.in_ecc[static_cast<std::size_t>(v)] = kInfDist;
  m.diameter = 0;
  m.radius = m.n == 0 ? 0 : kInfDist;
  for (Vertex u = 0; u < m.n; ++u) {
    Dist oe = m.out_ecc[static_cast<std::size_t>(u)];
    if (oe > m.diameter) m.diameter = oe;
    if (oe < m.radius || (oe == m.radius && m.center == kNoVertex)) {
      m.radius = oe;
      m.center = u;
    }
  }
  if (m.n == 0) m.radius = 0;
  return m;
}

// Outcome of replaying a spanner's claim against exact metrics.
struct SpannerCheck {
  bool pass = false;
  Dist diam_g = 0, diam_h = 0;
  Dist radius_g = 0, radius_h = 0;
  EdgeId edge_count = 0;
  // Worst realized per-vertex out-eccentricity ratio (1.0 when both are 0).
  double max_out_ecc_ratio = 1.0;
  double realized_diam_ratio = 1.0;
  std::string detail;
};

// Rebuilds H from g and result.edges, computes exact metrics of both, and
// checks result.claim. A spanner that loses strong connectivity fails with
// infinite stretch.
inline SpannerCheck audit_spanner(const DirectedGraph& g, const SpannerResult& result,
                                  Vertex cap = kDefaultOracleCap) {
  DirectedGraph h = g.edge_subgraph(result.edges);
  ExactMetrics mg = exact_metrics(g, cap);
  ExactMetrics mh = exact_metrics(h, cap);
  SpannerCheck c;
  c.diam_g = mg.diameter;
  c.diam_h = mh.diameter;
  c.radius_g = mg.radius;
  c.radius_h = mh.radius;
  c.edge_count = static_cast<EdgeId>(result.edges.size());
  if (!mh.strongly_connected) {
    c.pass = false;
    c.max_out_ecc_ratio = std::numeric_limits<double>::infinity();
    c.realized_diam_ratio = std::numeric_limits<double>::infinity();
    c.detail = "spanner is not strongly connected";
    return c;
  }
  if (mg.diameter > 0)
    c.realized_diam_ratio = static_cast<double>(mh.diameter) / static_cast<double>(mg.diameter);
  for (Vertex v = 0; v < mg.n; ++v) {
    Dist eg = mg.out_ecc[static_cast<std::size_t>(v)];
    Dist eh = mh.out_ecc[static_cast<std::size_t>(v)];
    if (eg > 0) {
      double r = static_cast<double>(eh) / static_cast<double>(eg);
      if (r > c.max_out_ecc_ratio) c.max_out_ecc_ratio = r;
    }
  }
  if (result.claim.scope == StretchScope::Diameter) {
    c.pass = result.claim.holds(mh.diameter, mg.diameter);
    if (!c.pass)
      c.detail = "diameter " + std::to_string(mh.diameter) + " exceeds claim " +
                 result.claim.str() + " at x=" + std::to_string(mg.diameter);
  } else {
    c.pass = true;
    for (Vertex v = 0; v < mg.n && c.pass; ++v) {
      Dist eg = mg.out_ecc[static_cast<std::size_t>(v)];
      Dist eh = mh.out_ecc[static_cast<std::size_t>(v)];
      if (!result.claim.holds(eh, eg)) {
        c.pass = false;
        c.detail = "out-eccentricity of vertex " + std::to_string(v) + " is " +
                   std::to_string(eh) + ", claim " + result.claim.str() + " at x=" +
                   std::to_string(eg);
      }
    }
  }
  return c;
}

}  // namespace xds
