#pragma once

// Mutable directed graph for the update-stream algorithms. Edge ids are
// stable: deletion marks the slot dead, insertion appends a fresh slot.
// Adjacency lists keep dead ids in place so per-vertex scan cursors held by
// the trees stay valid across updates.

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "xdspan/graph.hpp"

namespace xds {

struct DynEdge {
  Vertex from = kNoVertex;
  Vertex to = kNoVertex;
  Weight weight = 1;
  bool alive = true;
};

class DynamicGraph {
 public:
  explicit DynamicGraph(const DirectedGraph& g)
      : n_(g.num_vertices()), weighted_(g.weighted()), out_(static_cast<std::size_t>(n_)),
        in_(static_cast<std::size_t>(n_)) {
    edges_.reserve(static_cast<std::size_t>(g.num_edges()));
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      const Edge& e = g.edge(id);
      edges_.push_back({e.from, e.to, e.weight, true});
      out_[static_cast<std::size_t>(e.from)].push_back(id);
      in_[static_cast<std::size_t>(e.to)].push_back(id);
    }
    alive_ = g.num_edges();
  }

  Vertex num_vertices() const { return n_; }
  bool weighted() const { return weighted_; }
  EdgeId num_edge_slots() const { return static_cast<EdgeId>(edges_.size()); }
  std::int64_t num_alive() const { return alive_; }

  const DynEdge& edge(EdgeId id) const {
    if (id < 0 || id >= num_edge_slots()) throw std::out_of_range("DynamicGraph: bad edge id");
    return edges_[static_cast<std::size_t>(id)];
  }

  // All edge ids ever attached, dead ones included; callers check alive.
  std::span<const EdgeId> out_ids(Vertex u) const { return out_[check(u)]; }
  std::span<const EdgeId> in_ids(Vertex v) const { return in_[check(v)]; }

  EdgeId alive_edge_id(Vertex u, Vertex v) const {
    for (EdgeId id : out_[check(u)]) {
      const DynEdge& e = edges_[static_cast<std::size_t>(id)];
      if (e.alive && e.to == v) return id;
    }
    (void)check(v);
    return kNoEdge;
  }

  EdgeId insert_edge(Vertex u, Vertex v, Weight w = 1) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("DynamicGraph: self loop");
    if (!weighted_ && w != 1) throw std::invalid_argument("DynamicGraph: unweighted edges have weight 1");
    if (w < 1) throw std::invalid_argument("DynamicGraph: weight must be positive");
    if (alive_edge_id(u, v) != kNoEdge)
      throw std::invalid_argument("DynamicGraph: edge already present");
    EdgeId id = num_edge_slots();
    edges_.push_back({u, v, w, true});
    out_[static_cast<std::size_t>(u)].push_back(id);
    in_[static_cast<std::size_t>(v)].push_back(id);
    ++alive_;
    return id;
  }

  void delete_edge(EdgeId id) {
    if (id < 0 || id >= num_edge_slots()) throw std::out_of_range("DynamicGraph: bad edge id");
    DynEdge& e = edges_[static_cast<std::size_t>(id)];
    if (!e.alive) throw std::invalid_argument("DynamicGraph: edge already deleted");
    e.alive = false;
    --alive_;
  }

  // Immutable copy of the alive edges. Edge ids are renumbered; use
  // snapshot_edge_ids to translate snapshot ids back to slots here.
  DirectedGraph snapshot() const {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(alive_));
    for (const DynEdge& e : edges_)
      if (e.alive) edges.push_back({e.from, e.to, e.weight});
    return DirectedGraph(n_, std::move(edges), weighted_);
  }

  // Slot ids of the alive edges in the snapshot's canonical (from, to) order,
  // so snapshot edge i lives in slot snapshot_edge_ids()[i].
  std::vector<EdgeId> snapshot_edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(static_cast<std::size_t>(alive_));
    for (EdgeId id = 0; id < num_edge_slots(); ++id)
      if (edges_[static_cast<std::size_t>(id)].alive) ids.push_back(id);
    std::sort(ids.begin(), ids.end(), [this](EdgeId a, EdgeId b) {
      const DynEdge& ea = edges_[static_cast<std::size_t>(a)];
      const DynEdge& eb = edges_[static_cast<std::size_t>(b)];
      if (ea.from != eb.from) return ea.from < eb.from;
      return ea.to < eb.to;
    });
    return ids;
  }

 private:
  std::size_t check(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("DynamicGraph: bad vertex");
    return static_cast<std::size_t>(v);
  }

  Vertex n_ = 0;
  bool weighted_ = false;
  std::vector<DynEdge> edges_;
  std::vector<std::vector<EdgeId>> out_, in_;
  std::int64_t alive_ = 0;
};

}  // namespace xds
