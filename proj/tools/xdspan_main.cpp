// Command-line surface for the sparsification library.
//
//   xdspan generate     adversarial family or seeded random SC digraph
//   xdspan spanner      one-shot spanner construction + audit JSON
//   xdspan dynamic-sim  replay an update stream through a maintainer
//   xdspan approx-ecc   per-vertex eccentricity estimates (CSV + summary)
//
// Every command is deterministic given its inputs and seed; JSON output
// carries "schema": 1 and no timing fields, so reruns are byte-identical.
// --verify failures exit nonzero. Default seed comes from XDSPAN_SEED.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xdspan/dynamic.hpp"
#include "xdspan/ecc.hpp"
#include "xdspan/io.hpp"
#include "xdspan/lbgen.hpp"
#include "xdspan/oracle.hpp"
#include "xdspan/random_graph.hpp"
#include "xdspan/spanner.hpp"

using json = nlohmann::ordered_json;
using namespace xds;

namespace {

std::uint64_t env_seed() {
  const char* s = std::getenv("XDSPAN_SEED");
  if (s == nullptr || *s == '\0') return 0;
  return std::strtoull(s, nullptr, 10);
}

// Accepts "a/b", plain integers, and decimals like "0.25".
Frac parse_frac(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return Frac::parse(text);
  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  if (frac.empty() || frac.size() > 9)
    throw std::invalid_argument("bad fraction '" + text + "'");
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  std::int64_t num = std::stoll(whole.empty() ? "0" : whole) * den + std::stoll(frac);
  std::int64_t g = std::gcd(num, den);
  return Frac(num / g, den / g);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

void write_json(const std::string& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

json claim_json(const StretchClaim& c) {
  json j;
  j["factor"] = c.factor.str();
  j["additive"] = c.additive;
  j["ceil_factor"] = c.ceil_factor;
  j["scope"] = c.scope == StretchScope::Diameter ? "diameter" : "per_vertex_ecc";
  j["formula"] = c.str();
  return j;
}

json audit_json(const SpannerAudit& a) {
  json j;
  j["seed"] = a.seed;
  j["branch"] = a.branch;
  j["n_p"] = a.n_p;
  j["n_q"] = a.n_q;
  j["resamples"] = a.resamples;
  j["notes"] = a.notes;
  return j;
}

json check_json(const SpannerCheck& c) {
  json j;
  j["pass"] = c.pass;
  j["diam_graph"] = c.diam_g;
  j["diam_spanner"] = c.diam_h;
  j["radius_graph"] = c.radius_g;
  j["radius_spanner"] = c.radius_h;
  j["edge_count"] = c.edge_count;
  j["max_out_ecc_ratio"] = c.max_out_ecc_ratio;
  j["realized_diam_ratio"] = c.realized_diam_ratio;
  j["detail"] = c.detail;
  return j;
}

struct GenerateArgs {
  std::string family;
  int t = 1, N = 1;
  bool random = false;
  Vertex n = 0;
  std::int64_t m = 0;
  Weight max_weight = 1;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string landmarks;
  std::string stream_mode;  // "", "insert", "delete"
  std::int64_t stream_ops = 0;
  std::string stream_out;
};

int cmd_generate(const GenerateArgs& a) {
  std::uint64_t seed = a.seed.value_or(env_seed());
  if (a.random) {
    RandomGraph rg = random_scc_graph(a.n, a.m, seed, a.max_weight);
    write_graph(a.out, rg.graph);
    if (!a.stream_mode.empty()) {
      if (rg.graph.weighted())
        throw std::invalid_argument("streams need an unweighted base (--max-weight 1)");
      if (a.stream_out.empty())
        throw std::invalid_argument("--stream needs --stream-out");
      bool insert = a.stream_mode == "insert";
      std::vector<UpdateOp> ops = insert
          ? make_insert_stream(rg.graph, a.stream_ops, seed + 1)
          : make_delete_stream(rg, a.stream_ops, seed + 1);
      std::filesystem::path base(a.out), stream(a.stream_out);
      std::string base_ref = base.parent_path() == stream.parent_path()
                                 ? base.filename().string()
                                 : std::filesystem::absolute(base).string();
      write_stream(a.stream_out, base_ref, insert, ops);
    }
    return 0;
  }
  LbFamily fam;
  if (a.family == "lb15") fam = LbFamily::Lb15;
  else if (a.family == "lbecc") fam = LbFamily::LbEcc;
  else if (a.family == "lb53") fam = LbFamily::Lb53;
  else throw std::invalid_argument("--family must be lb15, lbecc, or lb53");
  LbGraph lb = gen_lb(fam, a.t, a.N);
  write_graph(a.out, lb.graph);
  for (const std::string& w : lb.warnings) std::cerr << "warning: " << w << "\n";
  if (!a.landmarks.empty()) {
    json j;
    j["schema"] = 1;
    j["family"] = lb_family_name(lb.family);
    j["t"] = lb.t;
    j["N"] = lb.N;
    j["n"] = lb.graph.num_vertices();
    j["m"] = lb.graph.num_edges();
    json names = json::object();
    for (const auto& [name, v] : lb.landmarks) names[name] = v;
    j["landmarks"] = names;
    write_json(a.landmarks, j);
  }
  return 0;
}

struct SpannerArgs {
  std::string kind;
  std::string in, out, audit;
  std::optional<std::uint64_t> seed;
  std::string p, r;
  std::int64_t d = 0;
  int k = 0;
  bool verify = false;
};

int cmd_spanner(const SpannerArgs& a) {
  DirectedGraph g = read_graph(a.in);
  SamplerConfig cfg;
  cfg.seed = a.seed.value_or(env_seed());
  SpannerResult result;
  if (a.kind == "diam15") {
    result = diam15_spanner(g, cfg);
  } else if (a.kind == "diam53") {
    result = diam53_spanner(g, cfg);
  } else if (a.kind == "tradeoff") {
    Frac p(1, 2), r(1, 2);
    if (!a.p.empty() && !a.r.empty()) {
      p = parse_frac(a.p);
      r = parse_frac(a.r);
    } else if (!a.p.empty()) {
      p = parse_frac(a.p);
      r = Frac(p.den - p.num, p.den);
    } else if (!a.r.empty()) {
      r = parse_frac(a.r);
      p = Frac(r.den - r.num, r.den);
    }
    result = tradeoff_spanner(g, p, r, cfg);
  } else if (a.kind == "additive") {
    if (a.d < 1) throw std::invalid_argument("additive kind needs --d >= 1");
    result = additive_spanner(g, a.d, cfg);
  } else if (a.kind == "ecc2") {
    result = ecc2_spanner(g, cfg, a.k);
  } else {
    throw std::invalid_argument("--kind must be diam15, diam53, tradeoff, additive, or ecc2");
  }

  if (!a.out.empty()) write_graph(a.out, g.edge_subgraph(result.edges));

  bool pass = true;
  json j;
  j["schema"] = 1;
  j["kind"] = spanner_kind_name(result.kind);
  j["n"] = g.num_vertices();
  j["graph_edges"] = g.num_edges();
  j["spanner_edges"] = static_cast<std::int64_t>(result.edges.size());
  j["claim"] = claim_json(result.claim);
  j["audit"] = audit_json(result.audit);
  if (a.verify) {
    SpannerCheck check = audit_spanner(g, result);
    j["check"] = check_json(check);
    pass = check.pass;
  }
  if (!a.audit.empty()) write_json(a.audit, j);
  std::cout << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

struct EccArgs {
  std::string in, out, summary;
  std::optional<std::uint64_t> seed;
  int k = 0;
  bool verify = false;
};

int cmd_approx_ecc(const EccArgs& a) {
  DirectedGraph g = read_graph(a.in);
  SamplerConfig cfg;
  cfg.seed = a.seed.value_or(env_seed());
  EccEstimates est = approx_eccentricities(g, cfg, a.k);

  std::string csv = "vertex,estimate\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    csv += std::to_string(v) + "," + std::to_string(est.out_ecc[static_cast<std::size_t>(v)]) +
           "\n";
  if (!a.out.empty()) write_text(a.out, csv);

  bool pass = true;
  json j;
  j["schema"] = 1;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["k"] = est.k;
  j["sample_size"] = static_cast<std::int64_t>(est.s.size());
  j["sample_depth"] = est.depth_s;
  j["seed"] = est.seed;
  if (a.verify) {
    ExactMetrics exact = exact_metrics(g);
    double max_ratio = 1.0;
    bool never_under = true;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      Dist e = est.out_ecc[static_cast<std::size_t>(v)];
      Dist x = exact.out_ecc[static_cast<std::size_t>(v)];
      if (e < x) never_under = false;
      if (x > 0) max_ratio = std::max(max_ratio, static_cast<double>(e) / static_cast<double>(x));
      else if (e > 0) never_under = false;
    }
    pass = never_under && max_ratio <= 2.0;
    j["check"] = {{"pass", pass}, {"max_ratio", max_ratio}, {"never_undershoots", never_under}};
  }
  if (!a.summary.empty()) write_json(a.summary, j);
  std::cout << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

struct SimArgs {
  std::string algo;
  std::string stream;
  std::string out;
  std::string eps = "0";
  std::optional<std::uint64_t> seed;
  int k = 0;
  std::int64_t every = 10;
  bool verify = false;
};

// One maintainer behind a uniform checkpoint interface.
struct SimDriver {
  virtual ~SimDriver() = default;
  virtual void apply(EdgeId id) = 0;
  virtual json checkpoint(const DynamicGraph& dg, bool verify, bool& ok) = 0;
};

struct PairDriver final : SimDriver {
  std::unique_ptr<DynamicPairBase> pair;
  PairDriver(DynamicGraph& dg, bool insert, Frac eps, std::uint64_t seed) {
    DynPairConfig cfg;
    cfg.eps = eps;
    cfg.sampler.seed = seed;
    pair = make_dynamic_pair(dg, insert, cfg);
  }
  void apply(EdgeId id) override { pair->on_update(id); }
  json checkpoint(const DynamicGraph& dg, bool verify, bool& ok) override {
    DynPairStatus st = pair->status();
    json j;
    j["anchor"] = st.anchor;
    j["cert"] = dom_cert_name(st.cert);
    j["bound"] = st.bound;
    j["out_depth"] = st.out_depth;
    j["in_ecc_anchor"] = st.in_ecc_anchor;
    j["s1_size"] = st.s1_size;
    j["s2_size"] = st.s2_size;
    j["rebuilds"] = st.rebuilds;
    j["resamples"] = st.resamples;
    j["anchor_swaps"] = st.anchor_swaps;
    j["s2_refreshes"] = st.s2_refreshes;
    if (verify) {
      DominationAudit audit = verify_domination(dg.snapshot(), pair->s1(), pair->s2(),
                                                pair->anchor(), pair->p_eff(), pair->q_eff());
      bool branch_ok = st.cert == DomCert::OutDominates ? audit.out_holds : audit.in_holds;
      ok = audit.disjunction_holds && branch_ok;
      j["verified"] = ok;
    }
    return j;
  }
};

struct Diam15Driver final : SimDriver {
  DynDiam15Core core;
  Frac eps;
  bool estimate_only;
  Diam15Driver(DynamicGraph& dg, bool insert, Frac eps_in, std::uint64_t seed, bool est_only)
      : core(dg, insert, eps_in, 0, 0, SamplerConfig{seed, 8, 64}),
        eps(eps_in),
        estimate_only(est_only) {}
  void apply(EdgeId id) override { core.apply(id); }
  json checkpoint(const DynamicGraph& dg, bool verify, bool& ok) override {
    json j;
    Dist est = core.estimate();
    j["estimate"] = est;
    if (estimate_only) {
      if (verify) {
        ExactMetrics exact = exact_metrics(dg.snapshot());
        Frac limit = Frac(3, 2).plus(eps);
        ok = est >= exact.diameter && est <= limit.mul_ceil(exact.diameter);
        j["diameter"] = exact.diameter;
        j["verified"] = ok;
      }
      return j;
    }
    DynMaterialized m = core.materialize();
    j["spanner_edges"] = static_cast<std::int64_t>(m.spanner.edges.size());
    if (verify) {
      SpannerCheck check = audit_spanner(m.graph, m.spanner);
      Frac limit = Frac(3, 2).plus(eps);
      bool sandwich = est >= check.diam_g && est <= limit.mul_ceil(check.diam_g);
      ok = check.pass && sandwich;
      j["check"] = check_json(check);
      j["estimate_in_window"] = sandwich;
    }
    return j;
  }
};

struct Diam53Driver final : SimDriver {
  DynDiam53Core core;
  Diam53Driver(DynamicGraph& dg, bool insert, Frac eps, std::uint64_t seed)
      : core(dg, insert, eps, SamplerConfig{seed, 8, 64}) {}
  void apply(EdgeId id) override { core.apply(id); }
  json checkpoint(const DynamicGraph&, bool verify, bool& ok) override {
    DynMaterialized m = core.materialize();
    json j;
    j["spanner_edges"] = static_cast<std::int64_t>(m.spanner.edges.size());
    j["fallback"] = core.fell_back();
    if (verify) {
      SpannerCheck check = audit_spanner(m.graph, m.spanner);
      ok = check.pass;
      j["check"] = check_json(check);
    }
    return j;
  }
};

struct Ecc2Driver final : SimDriver {
  DynEcc2Core core;
  Frac eps;
  Ecc2Driver(DynamicGraph& dg, bool insert, Frac eps_in, int k, std::uint64_t seed)
      : core(dg, insert, eps_in, k, SamplerConfig{seed, 8, 64}), eps(eps_in) {}
  void apply(EdgeId id) override { core.apply(id); }
  json checkpoint(const DynamicGraph& dg, bool verify, bool& ok) override {
    DynMaterialized m = core.materialize();
    json j;
    j["spanner_edges"] = static_cast<std::int64_t>(m.spanner.edges.size());
    j["rebuilds"] = core.rebuilds();
    if (verify) {
      SpannerCheck check = audit_spanner(m.graph, m.spanner);
      ExactMetrics exact = exact_metrics(dg.snapshot());
      std::vector<Dist> est = core.estimates();
      Frac limit = Frac(2, 1).plus(eps);
      bool est_ok = true;
      double max_ratio = 1.0;
      for (Vertex v = 0; v < dg.num_vertices(); ++v) {
        Dist e = est[static_cast<std::size_t>(v)];
        Dist x = exact.out_ecc[static_cast<std::size_t>(v)];
        if (e < x || !limit.le(e, x)) est_ok = false;
        if (x > 0) max_ratio = std::max(max_ratio, static_cast<double>(e) / static_cast<double>(x));
      }
      ok = check.pass && est_ok;
      j["check"] = check_json(check);
      j["estimates_in_window"] = est_ok;
      j["max_estimate_ratio"] = max_ratio;
    }
    return j;
  }
};

int cmd_dynamic_sim(const SimArgs& a) {
  UpdateStream stream = read_stream(a.stream);
  DynamicGraph dg(stream.base);
  Frac eps = parse_frac(a.eps);
  std::uint64_t seed = a.seed.value_or(env_seed());

  std::unique_ptr<SimDriver> driver;
  if (a.algo == "dom-pair") driver = std::make_unique<PairDriver>(dg, stream.insert_mode, eps, seed);
  else if (a.algo == "diam15")
    driver = std::make_unique<Diam15Driver>(dg, stream.insert_mode, eps, seed, false);
  else if (a.algo == "diam-estimate")
    driver = std::make_unique<Diam15Driver>(dg, stream.insert_mode, eps, seed, true);
  else if (a.algo == "diam53")
    driver = std::make_unique<Diam53Driver>(dg, stream.insert_mode, eps, seed);
  else if (a.algo == "ecc2")
    driver = std::make_unique<Ecc2Driver>(dg, stream.insert_mode, eps, a.k, seed);
  else
    throw std::invalid_argument(
        "--algo must be dom-pair, diam15, diam53, ecc2, or diam-estimate");

  bool all_ok = true;
  json checkpoints = json::array();
  auto take_checkpoint = [&](std::int64_t op_index) {
    bool ok = true;
    json j = driver->checkpoint(dg, a.verify, ok);
    json entry;
    entry["op"] = op_index;
    entry["alive_edges"] = dg.num_alive();
    for (auto& [key, value] : j.items()) entry[key] = value;
    checkpoints.push_back(entry);
    if (!ok) all_ok = false;
  };

  take_checkpoint(0);
  std::int64_t applied = 0;
  for (const UpdateOp& op : stream.ops) {
    EdgeId id;
    if (op.insert) {
      id = dg.insert_edge(op.u, op.v);
    } else {
      id = dg.alive_edge_id(op.u, op.v);
      if (id == kNoEdge)
        throw std::invalid_argument("stream deletes absent edge " + std::to_string(op.u) + "->" +
                                    std::to_string(op.v));
      dg.delete_edge(id);
    }
    driver->apply(id);
    ++applied;
    if (applied % a.every == 0 || applied == static_cast<std::int64_t>(stream.ops.size()))
      take_checkpoint(applied);
  }

  json j;
  j["schema"] = 1;
  j["algo"] = a.algo;
  j["mode"] = stream.insert_mode ? "insert" : "delete";
  j["eps"] = eps.str();
  j["seed"] = seed;
  j["ops"] = static_cast<std::int64_t>(stream.ops.size());
  j["checkpoint_every"] = a.every;
  j["verify"] = a.verify;
  j["checkpoints"] = checkpoints;
  if (a.verify) j["all_pass"] = all_ok;
  if (!a.out.empty()) write_json(a.out, j);
  std::cout << j.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extremal-distance spanners for directed graphs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* g = app.add_subcommand("generate", "emit a graph file (and optional stream)");
  g->add_option("--family", gen.family, "adversarial family: lb15, lbecc, lb53");
  g->add_option("--t", gen.t, "family stretch parameter");
  g->add_option("--N", gen.N, "family width parameter");
  g->add_flag("--random", gen.random, "seeded random strongly connected digraph");
  g->add_option("--n", gen.n, "vertex count (random)");
  g->add_option("--m", gen.m, "edge count (random)");
  g->add_option("--max-weight", gen.max_weight, "max edge weight; 1 = unweighted");
  g->add_option("--seed", gen.seed, "rng seed (default: XDSPAN_SEED or 0)");
  g->add_option("--out", gen.out, "graph file to write")->required();
  g->add_option("--landmarks", gen.landmarks, "landmark JSON (lb families)");
  g->add_option("--stream", gen.stream_mode, "also emit an update stream: insert|delete")
      ->check(CLI::IsMember({"insert", "delete"}));
  g->add_option("--ops", gen.stream_ops, "stream length");
  g->add_option("--stream-out", gen.stream_out, "stream file to write");

  SpannerArgs sp;
  CLI::App* s = app.add_subcommand("spanner", "build a spanner and its audit");
  s->add_option("--kind", sp.kind, "diam15, diam53, tradeoff, additive, ecc2")->required();
  s->add_option("--in", sp.in, "input graph file")->required();
  s->add_option("--out", sp.out, "spanner graph file");
  s->add_option("--audit", sp.audit, "audit JSON file");
  s->add_option("--seed", sp.seed, "rng seed (default: XDSPAN_SEED or 0)");
  s->add_option("--p", sp.p, "tradeoff p (fraction or decimal)");
  s->add_option("--r", sp.r, "tradeoff r (fraction or decimal)");
  s->add_option("--d", sp.d, "additive density parameter");
  s->add_option("--k", sp.k, "ecc2 cascade depth (0 = auto)");
  s->add_flag("--verify", sp.verify, "run the exact-distance audit");

  SimArgs sim;
  CLI::App* y = app.add_subcommand("dynamic-sim", "replay an update stream");
  y->add_option("--algo", sim.algo, "dom-pair, diam15, diam53, ecc2, diam-estimate")->required();
  y->add_option("--stream", sim.stream, "update stream file")->required();
  y->add_option("--eps", sim.eps, "slack (fraction or decimal)");
  y->add_option("--seed", sim.seed, "rng seed (default: XDSPAN_SEED or 0)");
  y->add_option("--k", sim.k, "ecc2 cascade depth (0 = auto)");
  y->add_option("--checkpoint-every", sim.every, "ops between checkpoints")
      ->check(CLI::PositiveNumber);
  y->add_option("--out", sim.out, "timeline JSON file");
  y->add_flag("--verify", sim.verify, "verify each checkpoint against the oracle");

  EccArgs ec;
  CLI::App* e = app.add_subcommand("approx-ecc", "per-vertex eccentricity estimates");
  e->add_option("--in", ec.in, "input graph file")->required();
  e->add_option("--out", ec.out, "CSV file (vertex,estimate)");
  e->add_option("--summary", ec.summary, "summary JSON file");
  e->add_option("--seed", ec.seed, "rng seed (default: XDSPAN_SEED or 0)");
  e->add_option("--k", ec.k, "cascade depth (0 = auto)");
  e->add_flag("--verify", ec.verify, "compare against exact eccentricities");

  CLI11_PARSE(app, argc, argv);

  try {
    if (g->parsed()) return cmd_generate(gen);
    if (s->parsed()) return cmd_spanner(sp);
    if (y->parsed()) return cmd_dynamic_sim(sim);
    if (e->parsed()) return cmd_approx_ecc(ec);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
