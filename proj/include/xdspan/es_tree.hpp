#pragma once

// Breadth-first tree over a mutable unweighted digraph, repaired in place on
// updates. One instance serves a single stream kind: under deletions levels
// only rise, under insertions they only fall; the per-vertex scan cursors
// rely on that monotonicity, so mixing kinds on one tree is rejected.
//
// Deletion repair is the classic level-raising walk: an orphan rescans its
// candidate list from its cursor for a parent one level up; failing that its
// level rises, the cursor resets, and its tree children are orphaned in turn.
// Total scan work over any deletion stream is O(cap * m + ops). Insertion
// repair is a plain relaxation cascade, O(m) per level drop.
//
// Levels are truncated: anything farther than the cap is reported unreached.

#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "xdspan/dynamic_graph.hpp"
#include "xdspan/sssp.hpp"

namespace xds {

class EsTree {
 public:
  EsTree(const DynamicGraph& g, std::vector<Vertex> roots, Direction dir, Dist cap = kInfDist)
      : g_(&g), roots_(std::move(roots)), dir_(dir) {
    if (g.weighted()) throw std::invalid_argument("EsTree: weighted graphs are not supported");
    if (roots_.empty()) throw std::invalid_argument("EsTree: need at least one root");
    Vertex n = g.num_vertices();
    for (Vertex r : roots_)
      if (r < 0 || r >= n) throw std::out_of_range("EsTree: root out of range");
    // A finite super-source level never exceeds n - 1; capping there keeps
    // the raising walk from spinning on vertices that lost all their paths.
    cap_ = std::min<Dist>(cap, std::max<Dist>(n, 1));
    dist_.assign(static_cast<std::size_t>(n), kInfDist);
    parent_.assign(static_cast<std::size_t>(n), kNoEdge);
    cursor_.assign(static_cast<std::size_t>(n), 0);
    is_root_.assign(static_cast<std::size_t>(n), false);
    in_queue_.assign(static_cast<std::size_t>(n), false);
    std::deque<Vertex> q;
    for (Vertex r : roots_) {
      if (!is_root_[static_cast<std::size_t>(r)]) q.push_back(r);
      is_root_[static_cast<std::size_t>(r)] = true;
      dist_[static_cast<std::size_t>(r)] = 0;
    }
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      if (dist_[static_cast<std::size_t>(x)] >= cap_) continue;
      for (EdgeId id : child_ids(x)) {
        ++scan_steps_;
        const DynEdge& e = g_->edge(id);
        if (!e.alive) continue;
        Vertex w = child_of(e, x);
        if (dist_[static_cast<std::size_t>(w)] == kInfDist) {
          dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(x)] + 1;
          parent_[static_cast<std::size_t>(w)] = id;
          q.push_back(w);
        }
      }
    }
  }

  Direction direction() const { return dir_; }
  Dist cap() const { return cap_; }
  const std::vector<Vertex>& roots() const { return roots_; }
  std::uint64_t scan_steps() const { return scan_steps_; }

  // kInfDist for vertices beyond the cap.
  const std::vector<Dist>& dist() const { return dist_; }
  Dist dist(Vertex v) const {
    Dist d = dist_[static_cast<std::size_t>(v)];
    return d > cap_ ? kInfDist : d;
  }

  bool reaches_all() const {
    for (Dist d : dist_)
      if (d > cap_) return false;
    return true;
  }

  // Largest level among reached vertices.
  Dist depth() const {
    Dist best = 0;
    for (Dist d : dist_)
      if (d <= cap_ && d > best) best = d;
    return best;
  }

  // Deepest reached vertex, ties to the smallest id.
  Vertex deepest_vertex() const {
    Dist best = -1;
    Vertex who = kNoVertex;
    for (Vertex v = 0; v < static_cast<Vertex>(dist_.size()); ++v) {
      Dist d = dist_[static_cast<std::size_t>(v)];
      if (d <= cap_ && d > best) {
        best = d;
        who = v;
      }
    }
    return who;
  }

  // Alive parent edges of all reached vertices: a shortest-path tree usable
  // as a spanner fragment.
  std::vector<EdgeId> tree_edges() const {
    std::vector<EdgeId> out;
    for (std::size_t v = 0; v < parent_.size(); ++v)
      if (dist_[v] <= cap_ && parent_[v] != kNoEdge) out.push_back(parent_[v]);
    return out;
  }

  // Edge ids on the tree path between v and the root side; empty when v is a
  // root or unreached.
  std::vector<EdgeId> path_edges(Vertex v) const {
    std::vector<EdgeId> out;
    if (dist_[static_cast<std::size_t>(v)] > cap_) return out;
    Vertex cur = v;
    while (parent_[static_cast<std::size_t>(cur)] != kNoEdge) {
      EdgeId id = parent_[static_cast<std::size_t>(cur)];
      out.push_back(id);
      cur = parent_of(g_->edge(id));
      if (out.size() > parent_.size()) throw std::logic_error("EsTree: parent cycle");
    }
    return out;
  }

  // Call after DynamicGraph::insert_edge.
  void on_insert(EdgeId id) {
    require_mode(Mode::Insert);
    const DynEdge& e = g_->edge(id);
    if (!e.alive) throw std::invalid_argument("EsTree::on_insert: edge is dead");
    ++scan_steps_;
    Vertex from = parent_of(e);   // the endpoint closer to the roots
    Vertex child = child_of(e, from);
    std::deque<Vertex> q;
    if (relax(child, from, id)) q.push_back(child);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      for (EdgeId cid : child_ids(x)) {
        ++scan_steps_;
        const DynEdge& ce = g_->edge(cid);
        if (!ce.alive) continue;
        Vertex w = child_of(ce, x);
        if (relax(w, x, cid)) q.push_back(w);
      }
    }
  }

  // Call after DynamicGraph::delete_edge.
  void on_delete(EdgeId id) {
    require_mode(Mode::Delete);
    const DynEdge& e = g_->edge(id);
    if (e.alive) throw std::invalid_argument("EsTree::on_delete: edge is still alive");
    ++scan_steps_;
    Vertex orphan = dir_ == Direction::Out ? e.to : e.from;
    if (parent_[static_cast<std::size_t>(orphan)] != id) return;
    std::deque<Vertex> q;
    push(q, orphan);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      in_queue_[static_cast<std::size_t>(x)] = false;
      if (is_root_[static_cast<std::size_t>(x)]) continue;
      Dist dx = dist_[static_cast<std::size_t>(x)];
      if (dx == kInfDist) continue;
      auto cands = candidate_ids(x);
      bool found = false;
      while (cursor_[static_cast<std::size_t>(x)] < cands.size()) {
        EdgeId cid = cands[cursor_[static_cast<std::size_t>(x)]];
        ++scan_steps_;
        const DynEdge& ce = g_->edge(cid);
        if (ce.alive && dist_[static_cast<std::size_t>(parent_of(ce))] + 1 == dx) {
          parent_[static_cast<std::size_t>(x)] = cid;
          found = true;
          break;
        }
        ++cursor_[static_cast<std::size_t>(x)];
      }
      if (found) continue;
      // No parent on the level above: raise x and orphan its subtree.
      ++scan_steps_;
      cursor_[static_cast<std::size_t>(x)] = 0;
      parent_[static_cast<std::size_t>(x)] = kNoEdge;
      if (dx + 1 > cap_) {
        dist_[static_cast<std::size_t>(x)] = kInfDist;
      } else {
        dist_[static_cast<std::size_t>(x)] = dx + 1;
        push(q, x);
      }
      for (EdgeId cid : child_ids(x)) {
        ++scan_steps_;
        const DynEdge& ce = g_->edge(cid);
        if (!ce.alive) continue;
        Vertex w = child_of(ce, x);
        if (parent_[static_cast<std::size_t>(w)] == cid) push(q, w);
      }
    }
  }

 private:
  enum class Mode { Unset, Insert, Delete };

  void require_mode(Mode m) {
    if (mode_ == Mode::Unset) mode_ = m;
    if (mode_ != m) throw std::logic_error("EsTree: one tree cannot serve mixed update kinds");
  }

  // Endpoint on the root side of an edge, and the other one.
  Vertex parent_of(const DynEdge& e) const { return dir_ == Direction::Out ? e.from : e.to; }
  Vertex child_of(const DynEdge& e, Vertex parent) const {
    return e.from == parent ? e.to : e.from;
  }
  std::span<const EdgeId> candidate_ids(Vertex x) const {
    return dir_ == Direction::Out ? g_->in_ids(x) : g_->out_ids(x);
  }
  std::span<const EdgeId> child_ids(Vertex x) const {
    return dir_ == Direction::Out ? g_->out_ids(x) : g_->in_ids(x);
  }

  void push(std::deque<Vertex>& q, Vertex v) {
    if (in_queue_[static_cast<std::size_t>(v)]) return;
    in_queue_[static_cast<std::size_t>(v)] = true;
    q.push_back(v);
  }

  bool relax(Vertex child, Vertex via, EdgeId id) {
    if (is_root_[static_cast<std::size_t>(child)]) return false;
    Dist dv = dist_[static_cast<std::size_t>(via)];
    if (dv >= cap_) return false;
    if (dv + 1 >= dist_[static_cast<std::size_t>(child)]) return false;
    dist_[static_cast<std::size_t>(child)] = dv + 1;
    parent_[static_cast<std::size_t>(child)] = id;
    return true;
  }

  const DynamicGraph* g_;
  std::vector<Vertex> roots_;
  Direction dir_;
  Dist cap_ = kInfDist;
  std::vector<Dist> dist_;
  std::vector<EdgeId> parent_;
  std::vector<std::size_t> cursor_;
  std::vector<bool> is_root_;
  std::vector<bool> in_queue_;
  std::uint64_t scan_steps_ = 0;
  Mode mode_ = Mode::Unset;
};

}  // namespace xds
