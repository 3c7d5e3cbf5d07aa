#pragma once

// Result records shared by the spanner constructions and the audit oracle.
// Stretch guarantees are symbolic (rational factor, additive term, optional
// ceiling) so they can be checked in exact integer arithmetic later.

#include <cstdint>
#include <string>
#include <vector>

#include "xdspan/core.hpp"

namespace xds {

enum class SpannerKind { Diam15, Diam53, Tradeoff, Additive, Ecc2 };

inline const char* spanner_kind_name(SpannerKind k) {
  switch (k) {
    case SpannerKind::Diam15: return "diam15";
    case SpannerKind::Diam53: return "diam53";
    case SpannerKind::Tradeoff: return "tradeoff";
    case SpannerKind::Additive: return "additive";
    case SpannerKind::Ecc2: return "ecc2";
  }
  return "?";
}

// What quantity the guarantee bounds.
enum class StretchScope { Diameter, PerVertexEcc };

// The promised bound on the spanner quantity y in terms of the graph
// quantity x:   y <= ceil(factor * x) + additive     (ceil_factor == true)
//               y <= factor * x + additive           (ceil_factor == false)
struct StretchClaim {
  Frac factor{1, 1};
  Dist additive = 0;
  bool ceil_factor = false;
  StretchScope scope = StretchScope::Diameter;

  // Exact check; kInfDist on the left always fails, since a spanner of a
  // strongly connected graph must itself be strongly connected.
  bool holds(Dist spanner_value, Dist graph_value) const {
    if (spanner_value >= kInfDist) return false;
    if (graph_value >= kInfDist) return true;
    if (ceil_factor) return spanner_value <= factor.mul_ceil(graph_value) + additive;
    return spanner_value * factor.den <= factor.num * graph_value + factor.den * additive;
  }

  std::string str() const {
    std::string s = ceil_factor ? "ceil(" + factor.str() + "*x)" : factor.str() + "*x";
    if (additive != 0) s += "+" + std::to_string(additive);
    return s;
  }
};

struct SpannerAudit {
  std::uint64_t seed = 0;
  double construction_ms = 0;  // informational; omitted from canonical output
  std::string branch;          // which certificate/size branch was taken
  std::int64_t n_p = 0;        // sample sizes actually used (0 when unused)
  std::int64_t n_q = 0;
  int resamples = 0;
  std::vector<std::string> notes;
};

// A sparsifier output: a subset of the input graph's edge ids plus the
// claimed guarantee and construction metadata.
struct SpannerResult {
  std::vector<EdgeId> edges;  // sorted ascending, unique
  SpannerKind kind = SpannerKind::Diam15;
  StretchClaim claim;
  SpannerAudit audit;
};

}  // namespace xds
