#pragma once

// Immutable directed graph stored in compressed sparse row form for both
// edge directions. Vertices are 0..n-1. Parallel input edges collapse to the
// minimum weight; self-loops are rejected.

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "xdspan/core.hpp"

namespace xds {

struct Edge {
  Vertex from = kNoVertex;
  Vertex to = kNoVertex;
  Weight weight = 1;
};

class DirectedGraph {
 public:
  DirectedGraph() : DirectedGraph(0, {}, false) {}

  // Edges may arrive in any order and may contain duplicates of (from, to);
  // duplicates keep the smallest weight. For unweighted graphs every weight
  // must be exactly 1.
  DirectedGraph(Vertex n, std::vector<Edge> edges, bool weighted)
      : n_(n), weighted_(weighted) {
    if (n < 0) throw std::invalid_argument("DirectedGraph: negative vertex count");
    for (const Edge& e : edges) {
      if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
        throw std::out_of_range("DirectedGraph: endpoint out of range");
      if (e.from == e.to)
        throw std::invalid_argument("DirectedGraph: self-loop on vertex " + std::to_string(e.from));
      if (e.weight < 0)
        throw std::invalid_argument("DirectedGraph: negative weight");
      if (!weighted && e.weight != 1)
        throw std::invalid_argument("DirectedGraph: unweighted graph requires weight 1");
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      if (a.from != b.from) return a.from < b.from;
      if (a.to != b.to) return a.to < b.to;
      return a.weight < b.weight;
    });
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
      if (!edges_.empty() && edges_.back().from == e.from && edges_.back().to == e.to)
        continue;  // duplicate (from,to): first instance carries the min weight
      edges_.push_back(e);
    }
    build_csr();
  }

  Vertex num_vertices() const { return n_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
  bool weighted() const { return weighted_; }

  const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Edge ids leaving / entering v. Out lists are sorted by head id, in lists
  // by tail id; both orders are deterministic.
  std::span<const EdgeId> out_edges(Vertex v) const {
    return {out_ids_.data() + out_off_[static_cast<std::size_t>(v)],
            out_ids_.data() + out_off_[static_cast<std::size_t>(v) + 1]};
  }
  std::span<const EdgeId> in_edges(Vertex v) const {
    return {in_ids_.data() + in_off_[static_cast<std::size_t>(v)],
            in_ids_.data() + in_off_[static_cast<std::size_t>(v) + 1]};
  }

  // Edge id of (u,v) or kNoEdge. Binary search over the sorted out list.
  EdgeId find_edge(Vertex u, Vertex v) const {
    auto span = out_edges(u);
    auto it = std::lower_bound(span.begin(), span.end(), v, [this](EdgeId id, Vertex head) {
      return edges_[static_cast<std::size_t>(id)].to < head;
    });
    if (it != span.end() && edges_[static_cast<std::size_t>(*it)].to == v) return *it;
    return kNoEdge;
  }

  // Subgraph on the same vertex set keeping exactly the given edge ids.
  DirectedGraph edge_subgraph(const std::vector<EdgeId>& keep) const {
    std::vector<Edge> sub;
    sub.reserve(keep.size());
    for (EdgeId id : keep) {
      if (id < 0 || id >= num_edges()) throw std::out_of_range("edge_subgraph: bad edge id");
      sub.push_back(edges_[static_cast<std::size_t>(id)]);
    }
    return DirectedGraph(n_, std::move(sub), weighted_);
  }

 private:
  void build_csr() {
    out_off_.assign(static_cast<std::size_t>(n_) + 1, 0);
    in_off_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const Edge& e : edges_) {
      ++out_off_[static_cast<std::size_t>(e.from) + 1];
      ++in_off_[static_cast<std::size_t>(e.to) + 1];
    }
    for (std::size_t i = 1; i < out_off_.size(); ++i) {
      out_off_[i] += out_off_[i - 1];
      in_off_[i] += in_off_[i - 1];
    }
    out_ids_.resize(edges_.size());
    in_ids_.resize(edges_.size());
    std::vector<EdgeId> out_cursor(out_off_.begin(), out_off_.end() - 1);
    std::vector<EdgeId> in_cursor(in_off_.begin(), in_off_.end() - 1);
    for (EdgeId id = 0; id < num_edges(); ++id) {
      const Edge& e = edges_[static_cast<std::size_t>(id)];
      out_ids_[static_cast<std::size_t>(out_cursor[static_cast<std::size_t>(e.from)]++)] = id;
      in_ids_[static_cast<std::size_t>(in_cursor[static_cast<std::size_t>(e.to)]++)] = id;
    }
    // edges_ is sorted by (from,to) and ids are assigned in that order, so
    // out lists are sorted by head and in lists by tail with no extra work.
  }

  Vertex n_ = 0;
  bool weighted_ = false;
  std::vector<Edge> edges_;  // sorted by (from, to)
  std::vector<EdgeId> out_off_, in_off_;
  std::vector<EdgeId> out_ids_, in_ids_;
};

}  // namespace xds
