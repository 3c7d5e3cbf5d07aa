// Acceptance gate: eight criteria, one [PASS]/[FAIL] line each, nonzero exit
// if any fails. argv[1] names the CLI binary (used by the determinism
// criterion). All tolerances are pinned here: stretch checks are exact
// integer inequalities, the stretch suite must finish under kStretchBudget,
// and determinism means byte-equal files.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "xdspan/dynamic.hpp"
#include "xdspan/ecc.hpp"
#include "xdspan/io.hpp"
#include "xdspan/lbgen.hpp"
#include "xdspan/oracle.hpp"
#include "xdspan/random_graph.hpp"
#include "xdspan/spanner.hpp"

using namespace xds;
namespace fs = std::filesystem;

namespace {

constexpr int kStretchSeeds = 50;
constexpr int kCertSeeds = 100;
constexpr std::chrono::seconds kStretchBudget{120};
const std::vector<Vertex> kCorpusSizes = {50, 100, 150};

struct Criterion {
  bool ok = true;
  std::string detail;  // first failure, or a summary on success
  void fail(const std::string& msg) {
    if (ok) {
      ok = false;
      detail = msg;
    }
  }
};

DirectedGraph corpus_graph(Vertex n, int seed) {
  return random_scc_graph(n, 5 * static_cast<std::int64_t>(n), static_cast<std::uint64_t>(seed))
      .graph;
}

DirectedGraph drop_edges(const DirectedGraph& g,
                         const std::vector<std::pair<Vertex, Vertex>>& cut) {
  std::vector<EdgeId> keep;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    bool dropped = false;
    for (auto [u, v] : cut)
      if (e.from == u && e.to == v) dropped = true;
    if (!dropped) keep.push_back(id);
  }
  return g.edge_subgraph(keep);
}

Dist dist_between(const DirectedGraph& g, Vertex s, Vertex t) {
  return sssp(g, {s}, Direction::Out).dist[static_cast<std::size_t>(t)];
}

// 1. Stretch suite: diam15, diam53, additive on the random corpus.
Criterion stretch_suite() {
  Criterion c;
  auto start = std::chrono::steady_clock::now();
  int checks = 0, graphs = 0;
  for (int seed = 1; seed <= kStretchSeeds; ++seed) {
    for (Vertex n : kCorpusSizes) {
      DirectedGraph g = corpus_graph(n, seed);
      ++graphs;
      ExactMetrics mg = exact_metrics(g);
      SamplerConfig cfg;
      cfg.seed = static_cast<std::uint64_t>(seed);
      auto diam_of = [&](const SpannerResult& r) {
        return exact_metrics(g.edge_subgraph(r.edges)).diameter;
      };
      std::string at = " (n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ")";

      Dist d15 = diam_of(diam15_spanner(g, cfg));
      ++checks;
      if (d15 > Frac(3, 2).mul_ceil(mg.diameter))
        c.fail("diam15 " + std::to_string(d15) + " > ceil(1.5*" + std::to_string(mg.diameter) +
               ")" + at);

      Dist d53 = diam_of(diam53_spanner(g, cfg));
      ++checks;
      if (d53 > Frac(5, 3).mul_ceil(mg.diameter))
        c.fail("diam53 " + std::to_string(d53) + " > ceil(5/3*" + std::to_string(mg.diameter) +
               ")" + at);

      for (std::int64_t d : {2, 5, 10}) {
        Dist da = diam_of(additive_spanner(g, d, cfg));
        ++checks;
        if (da > mg.diameter + (n + d - 1) / d)
          c.fail("additive d=" + std::to_string(d) + " " + std::to_string(da) + " > " +
                 std::to_string(mg.diameter) + "+ceil(n/d)" + at);
      }
    }
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - start);
  if (elapsed >= kStretchBudget)
    c.fail("runtime " + std::to_string(elapsed.count()) + "s exceeds budget");
  if (c.ok)
    c.detail = std::to_string(checks) + " stretch checks on " + std::to_string(graphs) +
               " graphs in " + std::to_string(elapsed.count()) + "s";
  return c;
}

// 2. Eccentricity suite: ecc2 spanner per-vertex 2x plus estimate sandwich.
Criterion ecc_suite() {
  Criterion c;
  int checks = 0;
  for (int seed = 1; seed <= kStretchSeeds; ++seed) {
    for (Vertex n : kCorpusSizes) {
      DirectedGraph g = corpus_graph(n, seed);
      ExactMetrics mg = exact_metrics(g);
      SamplerConfig cfg;
      cfg.seed = static_cast<std::uint64_t>(seed);
      std::string at = " (n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ")";

      SpannerResult r = ecc2_spanner(g, cfg);
      ExactMetrics mh = exact_metrics(g.edge_subgraph(r.edges));
      EccEstimates est = approx_eccentricities(g, cfg);
      for (Vertex v = 0; v < n; ++v) {
        auto ix = static_cast<std::size_t>(v);
        ++checks;
        if (mh.out_ecc[ix] > 2 * mg.out_ecc[ix])
          c.fail("spanner ecc " + std::to_string(mh.out_ecc[ix]) + " > 2*" +
                 std::to_string(mg.out_ecc[ix]) + " at v=" + std::to_string(v) + at);
        if (est.out_ecc[ix] < mg.out_ecc[ix] || est.out_ecc[ix] > 2 * mg.out_ecc[ix])
          c.fail("estimate " + std::to_string(est.out_ecc[ix]) + " outside [ecc, 2*ecc] at v=" +
                 std::to_string(v) + at);
      }
    }
  }
  if (c.ok) c.detail = std::to_string(checks) + " per-vertex checks";
  return c;
}

// 3. Lower-bound fixtures reproduce their exact distances.
Criterion lb_exactness() {
  Criterion c;
  int checks = 0;
  Rng rng(424242);
  for (int t : {1, 2, 3}) {
    for (int N : {2, 3, 4, 5, 6}) {
      std::string ts = std::to_string(t);
      std::string at = " (t=" + ts + " N=" + std::to_string(N) + ")";

      LbGraph lb = gen_lb15(t, N);
      ++checks;
      if (exact_metrics(lb.graph).diameter != 2 * t + 2) c.fail("lb15 diameter != 2t+2" + at);
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
          Vertex b = lb.at("b:" + std::to_string(i));
          Vertex cv = lb.at("c:" + std::to_string(j));
          DirectedGraph cut = drop_edges(lb.graph, {{b, cv}});
          Dist d = dist_between(cut, lb.at("a:1:" + std::to_string(i)),
                                lb.at("d:" + ts + ":" + std::to_string(j)));
          ++checks;
          if (d != 3 * t + 2)
            c.fail("lb15 cut (b:" + std::to_string(i) + ",c:" + std::to_string(j) + ") gives " +
                   std::to_string(d) + " != 3t+2" + at);
        }

      LbGraph le = gen_lb_ecc(t, N);
      ExactMetrics me = exact_metrics(le.graph);
      for (int i = 1; i <= N; ++i) {
        Vertex b = le.at("b:" + std::to_string(i));
        ++checks;
        if (me.out_ecc[static_cast<std::size_t>(b)] != t + 1)
          c.fail("lbecc OutEcc(b:" + std::to_string(i) + ") != t+1" + at);
      }

      LbGraph lq = gen_lb53(t, N);
      auto name = [&](const std::string& cls, const std::string& k, std::int64_t i,
                      std::int64_t j) {
        return cls + ":" + k + ":" + std::to_string(i) + ":" + std::to_string(j);
      };
      for (int s = 0; s < 10; ++s) {
        std::int64_t ix = 1 + rng.below(N), iy = 1 + rng.below(N);
        std::int64_t jx = 1 + rng.below(N), jy = 1 + rng.below(N);
        while (iy == ix) iy = 1 + rng.below(N);
        while (jy == jx) jy = 1 + rng.below(N);
        std::vector<std::pair<Vertex, Vertex>> cut = {
            {lq.at(name("a", ts, ix, jx)), lq.at(name("b", "0", iy, jx))},
            {lq.at(name("a", ts, ix, jx)), lq.at(name("a", "0", iy, jx))},
            {lq.at(name("b", ts, iy, jx)), lq.at(name("c", "0", iy, jy))},
        };
        DirectedGraph g0 = drop_edges(lq.graph, cut);
        Dist d = dist_between(g0, lq.at(name("a", "0", ix, jx)), lq.at(name("c", ts, iy, jy)));
        ++checks;
        if (d != 5 * t + 4)
          c.fail("lb53 triple cut gives " + std::to_string(d) + " != 5t+4" + at);
      }
    }
  }
  if (c.ok) c.detail = std::to_string(checks) + " exact-distance checks";
  return c;
}

// 4. Dominating-pair disjunction under the brute-force auditor.
Criterion certificate_suite() {
  Criterion c;
  int built = 0;
  for (int seed = 1; seed <= kCertSeeds; ++seed) {
    for (Vertex n : kCorpusSizes) {
      DirectedGraph g = corpus_graph(n, seed);
      SamplerConfig cfg;
      cfg.seed = static_cast<std::uint64_t>(seed);
      std::string at = " (n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ")";
      try {
        std::int64_t size = default_pair_size(n);
        DominatingPair pair = dominating_pair(g, Frac(1, 2), Frac(1, 2), size, size, cfg);
        ++built;
        DominationAudit audit = verify_domination(g, pair);
        if (!audit.disjunction_holds) c.fail("disjunction failed" + at);
        bool branch_ok =
            pair.cert == DomCert::OutDominates ? audit.out_holds : audit.in_holds;
        if (!branch_ok) c.fail("certified branch does not hold" + at);
      } catch (const ResampleLimitError&) {
        c.fail("resample cap hit" + at);
      }
    }
  }
  if (c.ok) c.detail = std::to_string(built) + " pairs certified";
  return c;
}

// 5. ES trees match fresh truncated searches after every operation.
Criterion es_equivalence() {
  Criterion c;
  int compared = 0;
  for (bool insert_mode : {false, true}) {
    RandomGraph rg = random_scc_graph(100, insert_mode ? 400 : 500, insert_mode ? 92 : 91);
    DynamicGraph dg(rg.graph);
    struct Spec {
      std::vector<Vertex> roots;
      Direction dir;
      Dist cap;
    };
    std::vector<Spec> specs = {{{0}, Direction::Out, kInfDist},
                               {{0}, Direction::In, kInfDist},
                               {{1, 2, 3}, Direction::Out, kInfDist},
                               {{0}, Direction::Out, 5}};
    std::vector<EsTree> trees;
    for (const Spec& s : specs) trees.emplace_back(dg, s.roots, s.dir, s.cap);
    std::vector<std::vector<Dist>> prev;
    for (const EsTree& t : trees) {
      std::vector<Dist> d;
      for (Vertex v = 0; v < 100; ++v) d.push_back(t.dist(v));
      prev.push_back(d);
    }

    std::vector<UpdateOp> ops = insert_mode ? make_insert_stream(rg.graph, 200, 93)
                                            : make_delete_stream(rg, 200, 93);
    int op_index = 0;
    for (const UpdateOp& op : ops) {
      EdgeId id;
      if (op.insert) {
        id = dg.insert_edge(op.u, op.v);
      } else {
        id = dg.alive_edge_id(op.u, op.v);
        dg.delete_edge(id);
      }
      ++op_index;
      DirectedGraph snap = dg.snapshot();
      for (std::size_t k = 0; k < trees.size(); ++k) {
        insert_mode ? trees[k].on_insert(id) : trees[k].on_delete(id);
        std::optional<Dist> limit;
        if (specs[k].cap != kInfDist) limit = specs[k].cap;
        ShortestPathTree fresh = sssp(snap, specs[k].roots, specs[k].dir, limit);
        for (Vertex v = 0; v < 100; ++v) {
          Dist have = trees[k].dist(v);
          Dist want = fresh.dist[static_cast<std::size_t>(v)];
          ++compared;
          std::string at = " (mode=" + std::string(insert_mode ? "insert" : "delete") +
                           " op=" + std::to_string(op_index) + " tree=" + std::to_string(k) +
                           " v=" + std::to_string(v) + ")";
          if (have != want)
            c.fail("dist " + std::to_string(have) + " != fresh " + std::to_string(want) + at);
          Dist before = prev[k][static_cast<std::size_t>(v)];
          bool monotone = insert_mode ? have <= before : have >= before;
          if (!monotone) c.fail("distance moved against the update direction" + at);
          prev[k][static_cast<std::size_t>(v)] = have;
        }
      }
    }
  }
  if (c.ok) c.detail = std::to_string(compared) + " per-op distance comparisons";
  return c;
}

// 6. Dynamic maintainers hold their slack-widened bounds at checkpoints.
Criterion dynamic_stretch() {
  Criterion c;
  int checkpoints = 0;
  for (bool insert_mode : {false, true}) {
    for (Frac eps : {Frac(1, 10), Frac(1, 4)}) {
      RandomGraph rg = random_scc_graph(80, insert_mode ? 320 : 400,
                                        insert_mode ? 501 : 500);
      DynamicGraph dg(rg.graph);
      SamplerConfig sc;
      sc.seed = 17;
      DynDiam15Core c15(dg, insert_mode, eps, 0, 0, sc);
      DynDiam53Core c53(dg, insert_mode, eps, sc);
      DynEcc2Core ce(dg, insert_mode, eps, 0, sc);

      std::vector<UpdateOp> ops = insert_mode ? make_insert_stream(rg.graph, 100, 502)
                                              : make_delete_stream(rg, 100, 502);
      std::string mode = insert_mode ? "insert" : "delete";
      auto checkpoint = [&](int op_index) {
        ++checkpoints;
        std::string at = " (mode=" + mode + " eps=" + eps.str() +
                         " op=" + std::to_string(op_index) + ")";
        ExactMetrics mg = exact_metrics(dg.snapshot());

        DynMaterialized m15 = c15.materialize();
        Dist d15 = exact_metrics(m15.graph.edge_subgraph(m15.spanner.edges)).diameter;
        if (d15 > Frac(3, 2).plus(eps).mul_ceil(mg.diameter))
          c.fail("diam15 " + std::to_string(d15) + " > ceil((1.5+eps)*" +
                 std::to_string(mg.diameter) + ")" + at);
        Dist est = c15.estimate();
        if (est < mg.diameter || est > Frac(3, 2).plus(eps).mul_ceil(mg.diameter))
          c.fail("estimate " + std::to_string(est) + " outside [D, ceil((1.5+eps)D)]" + at);

        DynMaterialized m53 = c53.materialize();
        Dist d53 = exact_metrics(m53.graph.edge_subgraph(m53.spanner.edges)).diameter;
        if (d53 > Frac(5, 3).plus(eps).mul_ceil(mg.diameter))
          c.fail("diam53 " + std::to_string(d53) + " > ceil((5/3+eps)*" +
                 std::to_string(mg.diameter) + ")" + at);

        DynMaterialized me = ce.materialize();
        ExactMetrics mh = exact_metrics(me.graph.edge_subgraph(me.spanner.edges));
        for (Vertex v = 0; v < 80; ++v) {
          auto ix = static_cast<std::size_t>(v);
          if (mh.out_ecc[ix] > Frac(2, 1).plus(eps).mul_ceil(mg.out_ecc[ix]))
            c.fail("ecc2 " + std::to_string(mh.out_ecc[ix]) + " > ceil((2+eps)*" +
                   std::to_string(mg.out_ecc[ix]) + ") at v=" + std::to_string(v) + at);
        }
      };

      checkpoint(0);
      int applied = 0;
      for (const UpdateOp& op : ops) {
        EdgeId id;
        if (op.insert) {
          id = dg.insert_edge(op.u, op.v);
        } else {
          id = dg.alive_edge_id(op.u, op.v);
          dg.delete_edge(id);
        }
        c15.apply(id);
        c53.apply(id);
        ce.apply(id);
        if (++applied % 10 == 0) checkpoint(applied);
      }
    }
  }
  if (c.ok) c.detail = std::to_string(checkpoints) + " verified checkpoints";
  return c;
}

// 7. Edge budgets: tree-union bound for diam15, sample bound for ecc2.
Criterion size_accounting() {
  Criterion c;
  double worst15 = 0, worst_ecc = 0;
  for (int seed = 1; seed <= kStretchSeeds; ++seed) {
    for (Vertex n : kCorpusSizes) {
      DirectedGraph g = corpus_graph(n, seed);
      SamplerConfig cfg;
      cfg.seed = static_cast<std::uint64_t>(seed);
      std::string at = " (n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ")";

      SpannerResult r15 = diam15_spanner(g, cfg);
      auto root = static_cast<std::int64_t>(
          std::ceil(std::sqrt(8.0 * n * std::log2(static_cast<double>(n)))));
      std::int64_t cap15 = 4 * static_cast<std::int64_t>(n) * root;
      auto e15 = static_cast<std::int64_t>(r15.edges.size());
      worst15 = std::max(worst15, static_cast<double>(e15) / static_cast<double>(cap15));
      if (e15 > cap15)
        c.fail("diam15 edges " + std::to_string(e15) + " > " + std::to_string(cap15) + at);

      SpannerResult re = ecc2_spanner(g, cfg);
      std::int64_t s_size = re.audit.n_p;
      std::int64_t log_n = ceil_log2(n);
      if (s_size > 20 * log_n * log_n)
        c.fail("ecc2 sample " + std::to_string(s_size) + " > 20*ceil(log n)^2" + at);
      std::int64_t cap_ecc = 4 * static_cast<std::int64_t>(n) * s_size;
      auto ee = static_cast<std::int64_t>(re.edges.size());
      worst_ecc = std::max(worst_ecc, static_cast<double>(ee) / static_cast<double>(cap_ecc));
      if (ee > cap_ecc)
        c.fail("ecc2 edges " + std::to_string(ee) + " > 4n|S|" + at);
    }
  }
  if (c.ok) {
    std::ostringstream out;
    out.precision(3);
    out << "worst diam15 fill " << worst15 << ", worst ecc2 fill " << worst_ecc;
    c.detail = out.str();
  }
  return c;
}

// 8. Every CLI command writes byte-identical files across two runs.
Criterion cli_determinism(const std::string& bin) {
  Criterion c;
  if (bin.empty()) {
    c.fail("CLI binary path missing (argv[1])");
    return c;
  }
  fs::path root = fs::temp_directory_path() / "xdspan_acceptance";
  fs::remove_all(root);
  std::vector<std::string> files;  // relative to the run directory

  auto run_all = [&](const fs::path& dir) -> bool {
    fs::create_directories(dir);
    auto run = [&](const std::string& args, const std::string& log) {
      std::string cmd = bin + " " + args + " > " + (dir / log).string() + " 2>&1";
      return std::system(cmd.c_str()) == 0;
    };
    auto p = [&](const std::string& name) { return (dir / name).string(); };
    bool ok = true;
    ok &= run("generate --family lb15 --t 2 --N 3 --out " + p("lb15.txt") + " --landmarks " +
                  p("lb15_marks.json"),
              "g1.log");
    ok &= run("generate --family lbecc --t 2 --N 3 --out " + p("lbecc.txt"), "g2.log");
    ok &= run("generate --family lb53 --t 1 --N 2 --out " + p("lb53.txt"), "g3.log");
    ok &= run("generate --random --n 50 --m 250 --seed 9 --out " + p("rnd.txt") +
                  " --stream delete --ops 30 --stream-out " + p("del.txt"),
              "g4.log");
    ok &= run("generate --random --n 50 --m 200 --seed 9 --out " + p("rnd_ins.txt") +
                  " --stream insert --ops 30 --stream-out " + p("ins.txt"),
              "g5.log");
    files = {"lb15.txt", "lb15_marks.json", "lbecc.txt", "lb53.txt",
             "rnd.txt",  "del.txt",         "rnd_ins.txt", "ins.txt"};

    const std::vector<std::pair<std::string, std::string>> kinds = {
        {"diam15", ""},        {"diam53", ""}, {"tradeoff", " --p 2/3"},
        {"additive", " --d 5"}, {"ecc2", ""}};
    for (const auto& [kind, extra] : kinds) {
      ok &= run("spanner --kind " + kind + extra + " --in " + p("rnd.txt") + " --seed 4 --out " +
                    p("sp_" + kind + ".txt") + " --audit " + p("sp_" + kind + ".json") +
                    " --verify",
                "sp_" + kind + ".log");
      files.push_back("sp_" + kind + ".txt");
      files.push_back("sp_" + kind + ".json");
    }

    for (const std::string algo :
         {"dom-pair", "diam15", "diam53", "ecc2", "diam-estimate"}) {
      ok &= run("dynamic-sim --algo " + algo + " --stream " + p("del.txt") +
                    " --eps 0.25 --seed 4 --verify --out " + p("tl_" + algo + ".json"),
                "tl_" + algo + ".log");
      files.push_back("tl_" + algo + ".json");
    }
    ok &= run("dynamic-sim --algo diam15 --stream " + p("ins.txt") +
                  " --eps 0.1 --seed 4 --verify --out " + p("tl_ins.json"),
              "tl_ins.log");
    files.push_back("tl_ins.json");

    ok &= run("approx-ecc --in " + p("rnd.txt") + " --seed 4 --out " + p("ecc.csv") +
                  " --summary " + p("ecc.json") + " --verify",
              "ecc.log");
    files.push_back("ecc.csv");
    files.push_back("ecc.json");
    return ok;
  };

  if (!run_all(root / "a")) c.fail("a CLI command exited nonzero on run A");
  if (c.ok && !run_all(root / "b")) c.fail("a CLI command exited nonzero on run B");
  if (c.ok) {
    for (const std::string& name : files) {
      std::ifstream fa(root / "a" / name, std::ios::binary);
      std::ifstream fb(root / "b" / name, std::ios::binary);
      std::ostringstream ba, bb;
      ba << fa.rdbuf();
      bb << fb.rdbuf();
      if (!fa || !fb) {
        c.fail("missing output file " + name);
        break;
      }
      if (ba.str() != bb.str()) {
        c.fail("bytes differ for " + name);
        break;
      }
    }
  }
  if (c.ok) c.detail = std::to_string(files.size()) + " files byte-identical across reruns";
  return c;
}

int report(int index, const std::string& title, const Criterion& c) {
  std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << title;
  if (!c.detail.empty()) std::cout << " -- " << c.detail;
  std::cout << std::endl;
  return c.ok ? 0 : 1;
}

template <typename Fn>
Criterion guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& ex) {
    Criterion c;
    c.fail(std::string("exception: ") + ex.what());
    return c;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::string bin = argc > 1 ? argv[1] : "";
  int failures = 0;
  failures += report(1, "stretch suite", guarded(stretch_suite));
  failures += report(2, "eccentricity suite", guarded(ecc_suite));
  failures += report(3, "lower-bound fixture exactness", guarded(lb_exactness));
  failures += report(4, "dominating-pair certificate", guarded(certificate_suite));
  failures += report(5, "ES-tree oracle equivalence", guarded(es_equivalence));
  failures += report(6, "dynamic stretch", guarded(dynamic_stretch));
  failures += report(7, "size accounting", guarded(size_accounting));
  failures += report(8, "CLI determinism", guarded([&] { return cli_determinism(bin); }));
  return failures == 0 ? 0 : 1;
}
