#pragma once

// Maintainers that keep the sparsification structures valid across a
// homogeneous update stream (all deletions or all insertions) on an
// unweighted strongly connected digraph. The price of staying incremental is
// a slack eps on every certified radius:
//
//   pair         cert <floor((p+2e)E), ceil((q+2e)E)> with E = live InEcc(anchor)
//   diam15       spanner within ceil((1.5+eps) diam), estimate sandwiched
//   diam53       spanner within ceil((5/3+eps) diam), 1.5 fallback when the
//                anchor's certified eccentricity outgrows sqrt(n)
//   ecc2         per-vertex out-eccentricities within (2+eps)
//
// Internal slack budgets: the pair under diam15 runs at eps/2, the two pairs
// under diam53 at eps/4, the eccentricity cascade at eps/4. Rebuild triggers
// compare exact integers (eps is a rational), so runs are reproducible.
//
// Drivers mutate the DynamicGraph first, then hand the edge id to apply();
// every derived tree is repaired or rebuilt from the post-update graph.

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "xdspan/domset.hpp"
#include "xdspan/dynamic_graph.hpp"
#include "xdspan/ecc.hpp"
#include "xdspan/es_tree.hpp"
#include "xdspan/spanner.hpp"
#include "xdspan/sssp.hpp"

namespace xds {

struct DynPairConfig {
  Frac p{1, 2};
  Frac q{1, 2};
  std::int64_t n_p = 0;  // 0 -> default_pair_size
  std::int64_t n_q = 0;
  Frac eps{0, 1};        // drift budget; 0 rebuilds on any depth change
  SamplerConfig sampler;
};

struct DynPairStatus {
  Vertex anchor = kNoVertex;
  DomCert cert = DomCert::OutDominates;
  Dist bound = 0;
  Dist out_depth = 0;
  Dist in_ecc_anchor = 0;
  std::int64_t s1_size = 0;
  std::int64_t s2_size = 0;
  int rebuilds = 0;
  int resamples = 0;
  int anchor_swaps = 0;   // incremental only
  int s2_refreshes = 0;   // incremental only
};

namespace detail {

inline Frac scale_down(Frac f, std::int64_t k) { return Frac(f.num, f.den * k); }

inline bool disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> meet;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
  return meet.empty();
}

inline Dist floor_sqrt(Vertex n) {
  Dist r = static_cast<Dist>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline constexpr std::uint64_t kSeedStride = 0x9e3779b97f4a7c15ULL;

}  // namespace detail

// A dominating pair kept valid over one stream kind. The coverage claim at
// any time: either the out-search from S1 reaches everything within
// floor((p+2e) InEcc(a)), or every vertex reaches S2 within
// ceil((q+2e) InEcc(a)), both at the live anchor eccentricity.
class DynamicPairBase {
 public:
  virtual ~DynamicPairBase() = default;
  virtual void on_update(EdgeId id) = 0;

  virtual const std::vector<Vertex>& s1() const = 0;
  virtual const std::vector<Vertex>& s2() const = 0;
  virtual Vertex anchor() const = 0;
  virtual Dist out_depth() const = 0;
  virtual Dist in_ecc_anchor() const = 0;
  virtual Frac p_eff() const = 0;  // p + 2 eps
  virtual Frac q_eff() const = 0;
  // Bumped whenever s1, s2, or the anchor change; dependents resync on it.
  virtual std::uint64_t version() const = 0;
  virtual DynPairStatus status() const = 0;

  DomCert cert() const {
    return out_depth() <= p_eff().mul_floor(in_ecc_anchor()) ? DomCert::OutDominates
                                                             : DomCert::InDominates;
  }
  Dist bound() const {
    Dist ecc = in_ecc_anchor();
    Dist h1 = p_eff().mul_floor(ecc);
    return out_depth() <= h1 ? h1 : q_eff().mul_ceil(ecc);
  }
};

namespace detail {

struct PairSizes {
  std::int64_t n_p = 0, n_q = 0;
};

inline PairSizes resolve_pair_sizes(const DynamicGraph& g, const DynPairConfig& cfg) {
  if (g.weighted())
    throw std::invalid_argument("dynamic pair: weighted graphs are not supported");
  Vertex n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("dynamic pair: need at least two vertices");
  if (cfg.p.num * cfg.q.den + cfg.q.num * cfg.p.den != cfg.p.den * cfg.q.den)
    throw std::invalid_argument("dynamic pair: p + q must equal 1");
  if (cfg.eps.num > cfg.eps.den)
    throw std::invalid_argument("dynamic pair: eps must stay within [0, 1]");
  PairSizes s;
  s.n_p = cfg.n_p != 0 ? cfg.n_p : default_pair_size(n, cfg.sampler.oversample_c);
  s.n_q = cfg.n_q != 0 ? cfg.n_q : default_pair_size(n, cfg.sampler.oversample_c);
  validate_pair_sizes(n, s.n_p, s.n_q, cfg.sampler.oversample_c);
  return s;
}

}  // namespace detail

// Deletion stream. The anchor only gets farther from S1 and its eccentricity
// only grows, so the structure is recomputed when the out-depth outgrows the
// last rebuild's value by more than (1+eps).
class DecrementalDominatingPair final : public DynamicPairBase {
 public:
  DecrementalDominatingPair(DynamicGraph& g, const DynPairConfig& cfg)
      : g_(&g), cfg_(cfg), rng_(cfg.sampler.seed) {
    detail::PairSizes sizes = detail::resolve_pair_sizes(g, cfg);
    n_p_ = sizes.n_p;
    n_q_ = sizes.n_q;
    p_eff_ = cfg_.p.plus(cfg_.eps).plus(cfg_.eps);
    q_eff_ = cfg_.q.plus(cfg_.eps).plus(cfg_.eps);
    s1_ = rng_.sample_vertices(g_->num_vertices(), n_p_);
    out_ = std::make_unique<EsTree>(*g_, s1_, Direction::Out);
    rebuild(true);
  }

  void on_update(EdgeId id) override {
    out_->on_delete(id);
    in_->on_delete(id);
    require_connected();
    // depth > (1 + eps) * l0 forces a rebuild
    if (cfg_.eps.den * out_->depth() > (cfg_.eps.den + cfg_.eps.num) * l0_) rebuild(false);
  }

  const std::vector<Vertex>& s1() const override { return s1_; }
  const std::vector<Vertex>& s2() const override { return s2_; }
  Vertex anchor() const override { return anchor_; }
  Dist out_depth() const override { return out_->depth(); }
  Dist in_ecc_anchor() const override { return in_->depth(); }
  Frac p_eff() const override { return p_eff_; }
  Frac q_eff() const override { return q_eff_; }
  std::uint64_t version() const override { return version_; }

  DynPairStatus status() const override {
    DynPairStatus st;
    st.anchor = anchor_;
    st.cert = cert();
    st.bound = bound();
    st.out_depth = out_depth();
    st.in_ecc_anchor = in_ecc_anchor();
    st.s1_size = static_cast<std::int64_t>(s1_.size());
    st.s2_size = static_cast<std::int64_t>(s2_.size());
    st.rebuilds = rebuilds_;
    st.resamples = resamples_;
    return st;
  }

 private:
  void require_connected() const {
    if (!out_->reaches_all() || !in_->reaches_all())
      throw NotStronglyConnectedError("dynamic pair: updates must preserve strong connectivity");
  }

  void rebuild(bool initial) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > cfg_.sampler.max_resamples)
        throw ResampleLimitError("dynamic pair: S1 and S2 stayed disjoint after " +
                                 std::to_string(cfg_.sampler.max_resamples) + " resamples");
      if (!out_->reaches_all())
        throw NotStronglyConnectedError("dynamic pair: input must be strongly connected");
      anchor_ = out_->deepest_vertex();
      s2_ = closest_set(g_->snapshot(), anchor_, n_q_, Direction::In);
      if (!detail::disjoint(s1_, s2_)) break;
      ++resamples_;
      s1_ = rng_.sample_vertices(g_->num_vertices(), n_p_);
      out_ = std::make_unique<EsTree>(*g_, s1_, Direction::Out);
    }
    in_ = std::make_unique<EsTree>(*g_, std::vector<Vertex>{anchor_}, Direction::In);
    l0_ = out_->depth();
    if (!initial) ++rebuilds_;
    ++version_;
  }

  DynamicGraph* g_;
  DynPairConfig cfg_;
  Rng rng_;
  std::int64_t n_p_ = 0, n_q_ = 0;
  Frac p_eff_{1, 2}, q_eff_{1, 2};
  std::vector<Vertex> s1_, s2_;
  Vertex anchor_ = kNoVertex;
  std::unique_ptr<EsTree> out_, in_;
  Dist l0_ = 0;
  int rebuilds_ = 0;
  int resamples_ = 0;
  std::uint64_t version_ = 0;
};

// Insertion stream. Depths only fall. A sampled watch set of far vertices
// keeps the anchor deep: when the anchor drifts inside (1-eps) l0 it is
// swapped for a still-far watch member, and only when the watch set (or the
// whole depth) collapses does a full recompute run. S2 refreshes whenever the
// anchor's own eccentricity falls below (1-eps) of its last value.
class IncrementalDominatingPair final : public DynamicPairBase {
 public:
  IncrementalDominatingPair(DynamicGraph& g, const DynPairConfig& cfg)
      : g_(&g), cfg_(cfg), rng_(cfg.sampler.seed) {
    detail::PairSizes sizes = detail::resolve_pair_sizes(g, cfg);
    n_p_ = sizes.n_p;
    n_q_ = sizes.n_q;
    p_eff_ = cfg_.p.plus(cfg_.eps).plus(cfg_.eps);
    q_eff_ = cfg_.q.plus(cfg_.eps).plus(cfg_.eps);
    watch_target_ = 8 * std::max(1, ceil_log2(g_->num_vertices()));
    s1_ = rng_.sample_vertices(g_->num_vertices(), n_p_);
    out_ = std::make_unique<EsTree>(*g_, s1_, Direction::Out);
    full_rebuild(true);
  }

  void on_update(EdgeId id) override {
    out_->on_insert(id);
    in_->on_insert(id);
    if (fell(out_->depth(), l0_)) {  // whole tree shrank: recompute
      full_rebuild(false);
      return;
    }
    if (fell(out_->dist(anchor_), l0_)) {  // anchor drifted close: swap it
      std::erase_if(watch_, [&](Vertex v) { return fell(out_->dist(v), l0_); });
      if (watch_.empty()) {
        full_rebuild(false);
      } else {
        ++anchor_swaps_;
        anchor_ = deepest_watch_member();
        attach_anchor();
      }
      return;
    }
    if (fell(in_->depth(), delta0_)) {  // anchor eccentricity shrank: new S2
      ++s2_refreshes_;
      refresh_s2();
    }
  }

  const std::vector<Vertex>& s1() const override { return s1_; }
  const std::vector<Vertex>& s2() const override { return s2_; }
  Vertex anchor() const override { return anchor_; }
  Dist out_depth() const override { return out_->depth(); }
  Dist in_ecc_anchor() const override { return in_->depth(); }
  Frac p_eff() const override { return p_eff_; }
  Frac q_eff() const override { return q_eff_; }
  std::uint64_t version() const override { return version_; }

  DynPairStatus status() const override {
    DynPairStatus st;
    st.anchor = anchor_;
    st.cert = cert();
    st.bound = bound();
    st.out_depth = out_depth();
    st.in_ecc_anchor = in_ecc_anchor();
    st.s1_size = static_cast<std::int64_t>(s1_.size());
    st.s2_size = static_cast<std::int64_t>(s2_.size());
    st.rebuilds = rebuilds_;
    st.resamples = resamples_;
    st.anchor_swaps = anchor_swaps_;
    st.s2_refreshes = s2_refreshes_;
    return st;
  }

 private:
  // val < (1 - eps) * ref in exact integers
  bool fell(Dist val, Dist ref) const {
    return cfg_.eps.den * val < (cfg_.eps.den - cfg_.eps.num) * ref;
  }

  void full_rebuild(bool initial) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > cfg_.sampler.max_resamples)
        throw ResampleLimitError("dynamic pair: S1 and S2 stayed disjoint after " +
                                 std::to_string(cfg_.sampler.max_resamples) + " resamples");
      if (!out_->reaches_all())
        throw NotStronglyConnectedError("dynamic pair: input must be strongly connected");
      l0_ = out_->depth();
      anchor_ = out_->deepest_vertex();
      rebuild_watch();
      s2_ = closest_set(g_->snapshot(), anchor_, n_q_, Direction::In);
      if (!detail::disjoint(s1_, s2_)) break;
      ++resamples_;
      s1_ = rng_.sample_vertices(g_->num_vertices(), n_p_);
      out_ = std::make_unique<EsTree>(*g_, s1_, Direction::Out);
    }
    in_ = std::make_unique<EsTree>(*g_, std::vector<Vertex>{anchor_}, Direction::In);
    delta0_ = in_->depth();
    if (!initial) ++rebuilds_;
    ++version_;
  }

  void rebuild_watch() {
    std::vector<Vertex> far;
    for (Vertex v = 0; v < g_->num_vertices(); ++v)
      if (!fell(out_->dist(v), l0_)) far.push_back(v);
    std::int64_t want = std::min<std::int64_t>(watch_target_,
                                               static_cast<std::int64_t>(far.size()));
    std::vector<Vertex> picks =
        rng_.sample_vertices(static_cast<Vertex>(far.size()), want);
    watch_.clear();
    for (Vertex ix : picks) watch_.push_back(far[static_cast<std::size_t>(ix)]);
    std::sort(watch_.begin(), watch_.end());
  }

  Vertex deepest_watch_member() const {
    Vertex best = watch_.front();
    for (Vertex v : watch_)
      if (out_->dist(v) > out_->dist(best)) best = v;
    return best;
  }

  // New anchor keeps S1; a disjoint S2 still forces a resampling recompute.
  void attach_anchor() {
    in_ = std::make_unique<EsTree>(*g_, std::vector<Vertex>{anchor_}, Direction::In);
    delta0_ = in_->depth();
    s2_ = closest_set(g_->snapshot(), anchor_, n_q_, Direction::In);
    ++version_;
    if (detail::disjoint(s1_, s2_)) {
      ++resamples_;
      s1_ = rng_.sample_vertices(g_->num_vertices(), n_p_);
      out_ = std::make_unique<EsTree>(*g_, s1_, Direction::Out);
      full_rebuild(false);
    }
  }

  void refresh_s2() {
    delta0_ = in_->depth();
    s2_ = closest_set(g_->snapshot(), anchor_, n_q_, Direction::In);
    ++version_;
    if (detail::disjoint(s1_, s2_)) {
      ++resamples_;
      s1_ = rng_.sample_vertices(g_->num_vertices(), n_p_);
      out_ = std::make_unique<EsTree>(*g_, s1_, Direction::Out);
      full_rebuild(false);
    }
  }

  DynamicGraph* g_;
  DynPairConfig cfg_;
  Rng rng_;
  std::int64_t n_p_ = 0, n_q_ = 0;
  Frac p_eff_{1, 2}, q_eff_{1, 2};
  std::int64_t watch_target_ = 0;
  std::vector<Vertex> s1_, s2_, watch_;
  Vertex anchor_ = kNoVertex;
  std::unique_ptr<EsTree> out_, in_;
  Dist l0_ = 0;      // out-depth at the last full recompute
  Dist delta0_ = 0;  // anchor eccentricity at the last S2 computation
  int rebuilds_ = 0;
  int resamples_ = 0;
  int anchor_swaps_ = 0;
  int s2_refreshes_ = 0;
  std::uint64_t version_ = 0;
};

inline std::unique_ptr<DynamicPairBase> make_dynamic_pair(DynamicGraph& g, bool insert_mode,
                                                          const DynPairConfig& cfg) {
  if (insert_mode) return std::make_unique<IncrementalDominatingPair>(g, cfg);
  return std::make_unique<DecrementalDominatingPair>(g, cfg);
}

// A spanner extracted from a maintainer at one instant: a fresh immutable
// snapshot plus edges expressed as the snapshot's ids, ready for auditing.
struct DynMaterialized {
  DirectedGraph graph;
  SpannerResult spanner;
};

namespace detail {

inline DynMaterialized materialize_slots(const DynamicGraph& g,
                                         const std::vector<bool>& slot_member) {
  DynMaterialized m{g.snapshot(), {}};
  std::vector<EdgeId> slots = g.snapshot_edge_ids();
  for (EdgeId i = 0; i < static_cast<EdgeId>(slots.size()); ++i)
    if (slot_member[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])])
      m.spanner.edges.push_back(i);
  return m;
}

// One in- plus one out-tree per designated vertex, forwarded as a group.
struct MemberTrees {
  std::vector<Vertex> members;
  std::vector<EsTree> trees;  // two per member: out then in

  void rebuild(DynamicGraph& g, std::vector<Vertex> who) {
    members = std::move(who);
    trees.clear();
    trees.reserve(members.size() * 2);
    for (Vertex s : members) {
      trees.emplace_back(g, std::vector<Vertex>{s}, Direction::Out);
      trees.emplace_back(g, std::vector<Vertex>{s}, Direction::In);
    }
  }
  void forward(EdgeId id, bool insert_mode) {
    for (EsTree& t : trees)
      insert_mode ? t.on_insert(id) : t.on_delete(id);
  }
  void mark(std::vector<bool>& slot_member) const {
    for (const EsTree& t : trees)
      for (EdgeId id : t.tree_edges()) slot_member[static_cast<std::size_t>(id)] = true;
  }
  // Largest eccentricity witnessed by the trees; all must reach everything.
  Dist max_depth() const {
    Dist best = 0;
    for (const EsTree& t : trees) {
      if (!t.reaches_all())
        throw NotStronglyConnectedError("dynamic spanner: graph lost strong connectivity");
      best = std::max(best, t.depth());
    }
    return best;
  }
};

}  // namespace detail

// Maintains the balanced-pair spanner and the (1.5+eps)-diameter estimate.
// The certified radius drifts by at most eps/2 per side between rebuilds,
// which is what keeps the overall guarantee at ceil((1.5+eps) diam).
class DynDiam15Core {
 public:
  DynDiam15Core(DynamicGraph& g, bool insert_mode, Frac eps, std::int64_t n_p = 0,
                std::int64_t n_q = 0, const SamplerConfig& sampler = {})
      : g_(&g), insert_mode_(insert_mode), eps_(eps) {
    DynPairConfig pc;
    pc.p = Frac(1, 2);
    pc.q = Frac(1, 2);
    pc.n_p = n_p;
    pc.n_q = n_q;
    pc.eps = detail::scale_down(eps, 2);
    pc.sampler = sampler;
    pair_ = make_dynamic_pair(g, insert_mode, pc);
    sync_trees();
  }

  void apply(EdgeId id) {
    ++ops_;
    pair_->on_update(id);
    if (pair_->version() != synced_version_) {
      sync_trees();  // fresh trees already reflect this update
      return;
    }
    trees_.forward(id, insert_mode_);
  }

  // Largest in- or out-eccentricity over S1 union S2. The anchor sits in S2,
  // so the deepest member tree witnesses at least the current out-depth.
  Dist max_member_ecc() const { return trees_.max_depth(); }

  Dist estimate() const { return Frac(3, 2).plus(eps_).mul_ceil(max_member_ecc()); }

  DynMaterialized materialize() const {
    std::vector<bool> member(static_cast<std::size_t>(g_->num_edge_slots()), false);
    trees_.mark(member);
    DynMaterialized m = detail::materialize_slots(*g_, member);
    m.spanner.kind = SpannerKind::Diam15;
    m.spanner.claim = {Frac(3, 2).plus(eps_), 0, true, StretchScope::Diameter};
    fill_audit(m.spanner.audit);
    return m;
  }

  const DynamicPairBase& pair() const { return *pair_; }
  std::int64_t ops() const { return ops_; }
  int tree_syncs() const { return tree_syncs_; }

 private:
  void sync_trees() {
    trees_.rebuild(*g_, detail::sorted_union(pair_->s1(), pair_->s2()));
    synced_version_ = pair_->version();
    ++tree_syncs_;
  }

  void fill_audit(SpannerAudit& audit) const {
    DynPairStatus st = pair_->status();
    audit.branch = dom_cert_name(st.cert);
    audit.n_p = st.s1_size;
    audit.n_q = st.s2_size;
    audit.resamples = st.resamples;
    audit.notes.push_back("rebuilds=" + std::to_string(st.rebuilds));
  }

  DynamicGraph* g_;
  bool insert_mode_;
  Frac eps_;
  std::unique_ptr<DynamicPairBase> pair_;
  detail::MemberTrees trees_;
  std::uint64_t synced_version_ = ~0ull;
  std::int64_t ops_ = 0;
  int tree_syncs_ = 0;
};

// Maintains the two asymmetric pairs and the exact anchor-neighborhood paths
// behind the 5/3 construction. Pairwise paths come from per-source trees
// truncated at 2*floor(sqrt n): while both certified eccentricities of the
// first pair's anchor stay within floor(sqrt n), every needed path fits under
// the truncation. The moment that certificate breaks, the diameter itself
// exceeds sqrt n and the maintainer falls back to the 1.5 machinery, whose
// guarantee implies this one's.
class DynDiam53Core {
 public:
  DynDiam53Core(DynamicGraph& g, bool insert_mode, Frac eps, const SamplerConfig& sampler = {})
      : g_(&g), insert_mode_(insert_mode), eps_(eps), sampler_(sampler) {
    Vertex n = g.num_vertices();
    sqrt_n_ = detail::floor_sqrt(n);
    DirectedGraph snap = g.snapshot();
    std::int64_t log_n = std::max(1, ceil_log2(n));
    DiameterEstimate est = diameter_2approx(snap);
    double alpha_real = std::cbrt(static_cast<double>(n) *
                                  static_cast<double>(std::max<Dist>(est.upper, 1)) /
                                  static_cast<double>(log_n));
    std::int64_t alpha = std::clamp<std::int64_t>(
        static_cast<std::int64_t>(std::ceil(alpha_real)), 1, n);
    std::int64_t small = std::min<std::int64_t>(n, alpha * log_n);
    std::int64_t big = std::min<std::int64_t>(
        n, (sampler.oversample_c * n * log_n + small - 1) / small);

    DynPairConfig pa;
    pa.p = Frac(2, 3);
    pa.q = Frac(1, 3);
    pa.n_p = small;
    pa.n_q = big;
    pa.eps = detail::scale_down(eps, 4);
    pa.sampler = sampler;
    DynPairConfig pb = pa;
    pb.p = Frac(1, 3);
    pb.q = Frac(2, 3);
    pb.n_p = big;
    pb.n_q = small;
    pb.sampler.seed = sampler.seed + detail::kSeedStride;
    pair_a_ = make_dynamic_pair(g, insert_mode, pa);
    pair_b_ = make_dynamic_pair(g, insert_mode, pb);
    sync_trees();
    check_fallback();
  }

  void apply(EdgeId id) {
    ++ops_;
    if (fallback_) {
      fallback_->apply(id);
      return;
    }
    pair_a_->on_update(id);
    pair_b_->on_update(id);
    if (pair_a_->version() != synced_a_ || pair_b_->version() != synced_b_) {
      sync_trees();
    } else {
      trees_.forward(id, insert_mode_);
      for (EsTree& t : super_) insert_mode_ ? t.on_insert(id) : t.on_delete(id);
      for (EsTree& t : paths_) insert_mode_ ? t.on_insert(id) : t.on_delete(id);
      insert_mode_ ? anchor_out_->on_insert(id) : anchor_out_->on_delete(id);
    }
    check_fallback();
  }

  bool fell_back() const { return fallback_ != nullptr; }
  const std::vector<std::string>& events() const { return events_; }
  std::int64_t ops() const { return ops_; }

  DynMaterialized materialize() const {
    DynMaterialized m;
    if (fallback_) {
      m = fallback_->materialize();
      m.spanner.audit.branch = "fallback15";
    } else {
      std::vector<bool> member(static_cast<std::size_t>(g_->num_edge_slots()), false);
      trees_.mark(member);
      for (const EsTree& t : super_)
        for (EdgeId id : t.tree_edges()) member[static_cast<std::size_t>(id)] = true;
      for (std::size_t i = 0; i < paths_.size(); ++i)
        for (Vertex v : pair_b_->s1())
          for (EdgeId id : paths_[i].path_edges(v)) {
            member[static_cast<std::size_t>(id)] = true;
          }
      m = detail::materialize_slots(*g_, member);
      m.spanner.audit.branch = "two_pairs";
      m.spanner.audit.n_p = static_cast<std::int64_t>(pair_a_->s1().size());
      m.spanner.audit.n_q = static_cast<std::int64_t>(pair_a_->s2().size());
    }
    m.spanner.kind = SpannerKind::Diam53;
    m.spanner.claim = {Frac(5, 3).plus(eps_), 0, true, StretchScope::Diameter};
    for (const std::string& e : events_) m.spanner.audit.notes.push_back(e);
    return m;
  }

 private:
  void sync_trees() {
    trees_.rebuild(*g_, detail::sorted_union(pair_a_->s1(), pair_b_->s2()));
    super_.clear();
    super_.emplace_back(*g_, pair_a_->s2(), Direction::In);
    super_.emplace_back(*g_, pair_b_->s1(), Direction::Out);
    paths_.clear();
    paths_.reserve(pair_a_->s2().size());
    for (Vertex u : pair_a_->s2())
      paths_.emplace_back(*g_, std::vector<Vertex>{u}, Direction::Out, 2 * sqrt_n_);
    anchor_out_ = std::make_unique<EsTree>(*g_, std::vector<Vertex>{pair_a_->anchor()},
                                           Direction::Out);
    synced_a_ = pair_a_->version();
    synced_b_ = pair_b_->version();
  }

  // Both quantities are certified lower bounds on the diameter; while they
  // stay within floor(sqrt n), any path between the maintained neighborhoods
  // is at most twice that, i.e. inside the truncated trees.
  void check_fallback() {
    if (fallback_) return;
    if (!anchor_out_->reaches_all())
      throw NotStronglyConnectedError("dynamic spanner: graph lost strong connectivity");
    Dist witness = std::max(pair_a_->in_ecc_anchor(), anchor_out_->depth());
    if (witness <= sqrt_n_) return;
    events_.push_back("op=" + std::to_string(ops_) +
                      " anchor eccentricity passed sqrt(n); switched to 1.5 machinery");
    SamplerConfig sc = sampler_;
    sc.seed = sampler_.seed + 2 * detail::kSeedStride;
    fallback_ = std::make_unique<DynDiam15Core>(*g_, insert_mode_, eps_, 0, 0, sc);
    pair_a_.reset();
    pair_b_.reset();
    trees_ = {};
    super_.clear();
    paths_.clear();
    anchor_out_.reset();
  }

  DynamicGraph* g_;
  bool insert_mode_;
  Frac eps_;
  SamplerConfig sampler_;
  Dist sqrt_n_ = 0;
  std::unique_ptr<DynamicPairBase> pair_a_, pair_b_;
  detail::MemberTrees trees_;
  std::vector<EsTree> super_;   // in-search from A2, out-search from B1
  std::vector<EsTree> paths_;   // truncated out-tree per member of A2
  std::unique_ptr<EsTree> anchor_out_;
  std::unique_ptr<DynDiam15Core> fallback_;
  std::vector<std::string> events_;
  std::uint64_t synced_a_ = ~0ull, synced_b_ = ~0ull;
  std::int64_t ops_ = 0;
};

// Maintains the radius-dominating cascade: trees of every member plus the
// coverage search. Deletions rebuild when coverage depth outgrows (1+eps/4);
// insertions watch each level anchor's in-ball at radius floor((1-eps/4) q):
// once the ball holds more vertices than the level's target, the cascade no
// longer matches what a fresh build would pick, so it is recomputed.
class DynEcc2Core {
 public:
  DynEcc2Core(DynamicGraph& g, bool insert_mode, Frac eps, int k = 0,
              const SamplerConfig& sampler = {})
      : g_(&g), insert_mode_(insert_mode), eps_(eps), k_(k), sampler_(sampler) {
    if (g.weighted())
      throw std::invalid_argument("dynamic ecc: weighted graphs are not supported");
    if (eps.num > eps.den)
      throw std::invalid_argument("dynamic ecc: eps must stay within [0, 1]");
    eps_hat_ = detail::scale_down(eps, 4);
    build_cascade();
  }

  void apply(EdgeId id) {
    ++ops_;
    trees_.forward(id, insert_mode_);
    insert_mode_ ? super_out_->on_insert(id) : super_out_->on_delete(id);
    for (EsTree& w : ball_watch_) insert_mode_ ? w.on_insert(id) : w.on_delete(id);
    if (!insert_mode_) {
      // coverage depth grew past (1 + eps/4) of its build value
      if (eps_hat_.den * super_out_->depth() >
          (eps_hat_.den + eps_hat_.num) * base_depth_) {
        record_rebuild("coverage depth grew");
        build_cascade();
      }
      return;
    }
    for (std::size_t i = 0; i < ball_watch_.size(); ++i) {
      if (reached_count(ball_watch_[i]) > ball_limit_[i]) {
        record_rebuild("level ball outgrew its target");
        build_cascade();
        return;
      }
    }
  }

  const std::vector<Vertex>& sample() const { return rds_.s; }
  int rebuilds() const { return rebuilds_; }
  const std::vector<std::string>& events() const { return events_; }

  // Per-vertex out-eccentricity upper estimates from the live trees.
  std::vector<Dist> estimates() const {
    Vertex n = g_->num_vertices();
    if (!super_out_->reaches_all())
      throw NotStronglyConnectedError("dynamic ecc: graph lost strong connectivity");
    Dist depth = super_out_->depth();
    std::vector<Dist> est(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < trees_.members.size(); ++i) {
      const EsTree& in_tree = trees_.trees[2 * i + 1];
      if (!in_tree.reaches_all())
        throw NotStronglyConnectedError("dynamic ecc: graph lost strong connectivity");
      for (Vertex x = 0; x < n; ++x)
        est[static_cast<std::size_t>(x)] =
            std::max(est[static_cast<std::size_t>(x)], in_tree.dist(x));
    }
    for (Dist& d : est) d += depth;
    return est;
  }

  DynMaterialized materialize() const {
    std::vector<bool> member(static_cast<std::size_t>(g_->num_edge_slots()), false);
    trees_.mark(member);
    DynMaterialized m = detail::materialize_slots(*g_, member);
    m.spanner.kind = SpannerKind::Ecc2;
    m.spanner.claim = {Frac(2, 1).plus(eps_), 0, false, StretchScope::PerVertexEcc};
    m.spanner.audit.n_p = static_cast<std::int64_t>(rds_.s.size());
    m.spanner.audit.branch = "k=" + std::to_string(rds_.k);
    m.spanner.audit.notes.push_back("rebuilds=" + std::to_string(rebuilds_));
    return m;
  }

 private:
  static Vertex reached_count(const EsTree& t) {
    Vertex count = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(t.dist().size()); ++v)
      if (t.dist(v) < kInfDist) ++count;
    return count;
  }

  void record_rebuild(const std::string& why) {
    ++rebuilds_;
    events_.push_back("op=" + std::to_string(ops_) + " " + why + "; cascade recomputed");
  }

  void build_cascade() {
    DirectedGraph snap = g_->snapshot();
    SamplerConfig sc = sampler_;
    sc.seed = sampler_.seed + static_cast<std::uint64_t>(rebuilds_) * detail::kSeedStride;
    rds_ = radius_dominating_set(snap, k_, sc);
    trees_.rebuild(*g_, rds_.s);
    super_out_ = std::make_unique<EsTree>(*g_, rds_.s, Direction::Out);
    base_depth_ = super_out_->depth();
    ball_watch_.clear();
    ball_limit_.clear();
    if (!insert_mode_) return;
    for (const RadiusLevel& lvl : rds_.levels) {
      Vertex limit = static_cast<Vertex>(lvl.b_set.size());
      Dist q = ball_radius(snap, lvl.anchor, limit);
      Dist guard = (eps_hat_.den - eps_hat_.num) * q / eps_hat_.den;  // floor((1-e)q)
      ball_watch_.emplace_back(*g_, std::vector<Vertex>{lvl.anchor}, Direction::In, guard);
      ball_limit_.push_back(limit);
    }
  }

  // Largest radius whose in-ball still fits inside the limit.
  static Dist ball_radius(const DirectedGraph& g, Vertex a, Vertex limit) {
    std::vector<Dist> ds = sssp(g, {a}, Direction::In).dist;
    std::sort(ds.begin(), ds.end());
    if (limit >= static_cast<Vertex>(ds.size())) return static_cast<Dist>(ds.size());
    return std::max<Dist>(ds[static_cast<std::size_t>(limit)] - 1, 0);
  }

  DynamicGraph* g_;
  bool insert_mode_;
  Frac eps_;
  Frac eps_hat_{0, 1};
  int k_ = 0;
  SamplerConfig sampler_;
  RadiusDominatingSet rds_;
  detail::MemberTrees trees_;
  std::unique_ptr<EsTree> super_out_;
  Dist base_depth_ = 0;
  std::vector<EsTree> ball_watch_;   // incremental mode only
  std::vector<Vertex> ball_limit_;
  int rebuilds_ = 0;
  std::int64_t ops_ = 0;
  std::vector<std::string> events_;
};

}  // namespace xds
