#include <sstream>

#include "common.hpp"
#include "pcf/generate.hpp"
#include "pcf/io.hpp"
#include "pcf/list_size.hpp"
#include "pcf/reduce.hpp"
#include "pcf/solvers.hpp"

namespace pcf::cli {

namespace {

void write_coloring_file(const std::string& path, const Coloring& phi, json& rec) {
  std::ostringstream ss;
  io::write_coloring(ss, phi);
  write_text(path, ss.str());
  rec["outputs"].push_back(path);
}

struct VerifyOpts {
  InstanceOptions inst;
  ListOptions lists;
  std::string coloring, set_coloring, out;
  int t = 1;
  int bichromatic = 0;
};

int run_verify(const VerifyOpts& o, Context& ctx) {
  Stopwatch clock;
  json rec = record("verify");
  const ConflictInstance inst = load_instance(o.inst, rec["inputs"]);
  const int n = inst.num_vertices();
  Verdict verdict = Verdict::fail;
  if (!o.set_coloring.empty()) {
    rec["inputs"].push_back(input_entry(o.set_coloring));
    const SetColoring psi = io::load_set_coloring(o.set_coloring, n);
    const bool ok = is_fractional_pcf(inst, psi);
    rec["a"] = psi.a;
    rec["b"] = psi.b;
    rec["fractional_pcf"] = ok;
    const Cor16Report cor = cor16_properties(inst, psi);
    rec["stmt2"] = cor.stmt2;
    rec["stmt3"] = cor.stmt3;
    verdict = ok ? Verdict::pass : Verdict::fail;
  } else {
    rec["inputs"].push_back(input_entry(o.coloring));
    const Coloring phi = io::load_coloring(o.coloring, n);
    const bool proper = is_proper(inst.graph, phi);
    const bool cf = is_t_conflict_free(inst.hypergraph, phi, o.t);
    bool lists_ok = true;
    if (!o.lists.lists.empty() || o.lists.palette > 0) {
      const ListAssignment lists = load_list_option(o.lists, n, rec["inputs"]);
      for (Vertex v = 0; v < n; ++v) lists_ok = lists_ok && lists.allows(v, phi[static_cast<std::size_t>(v)]);
      rec["lists_ok"] = lists_ok;
    }
    rec["proper"] = proper;
    rec["conflict_free"] = cf;
    rec["t"] = o.t;
    rec["colors_used"] = colors_used(phi);
    bool ok = proper && cf && lists_ok;
    if (o.bichromatic > 0) {
      const bool paths = proper && bichromatic_paths_ok(inst.graph, phi, o.bichromatic);
      rec["bichromatic_paths_ok"] = paths;
      ok = ok && paths;
    }
    verdict = ok ? Verdict::pass : Verdict::fail;
  }
  rec["wall_ms"] = clock.ms();
  return emit(ctx, rec, o.out, verdict);
}

struct GreedyOpts {
  InstanceOptions inst;
  std::string out, write_coloring;
};

int run_greedy(const GreedyOpts& o, Context& ctx) {
  Stopwatch clock;
  json rec = record("greedy");
  rec["outputs"] = json::array();
  const ConflictInstance inst = load_instance(o.inst, rec["inputs"]);
  const Coloring phi = greedy_pcf(inst);
  const int d = degeneracy_ordering(inst.graph).degeneracy;
  const int bound = d + inst.hypergraph.max_degree() + 1;
  const bool valid = is_pcf(inst, phi);
  const int used = colors_used(phi);
  rec["colors_used"] = used;
  rec["degeneracy"] = d;
  rec["max_degree_h"] = inst.hypergraph.max_degree();
  rec["bound"] = bound;
  rec["pcf"] = valid;
  if (!o.write_coloring.empty()) write_coloring_file(o.write_coloring, phi, rec);
  rec["wall_ms"] = clock.ms();
  return emit(ctx, rec, o.out, valid && used <= bound ? Verdict::pass : Verdict::fail);
}

struct ExactOpts {
  InstanceOptions inst;
  std::string out, write_coloring;
  int t = 1;
  long node_cap = 50'000'000;
};

int run_exact(const ExactOpts& o, Context& ctx) {
  Stopwatch clock;
  json rec = record("exact");
  rec["outputs"] = json::array();
  const ConflictInstance inst = load_instance(o.inst, rec["inputs"]);
  SolverConfig cfg;
  cfg.t = o.t;
  cfg.node_cap = o.node_cap;
  const ChiResult chi = exact_chi_pcf(inst, cfg);
  const bool witness_ok = is_pcf(inst, chi.witness, nullptr, o.t);
  if (chi.exact()) {
    rec["chi_pcf"] = chi.upper;
  } else {
    rec["lower"] = chi.lower;
    rec["upper"] = chi.upper;
  }
  rec["t"] = o.t;
  rec["nodes"] = chi.nodes;
  rec["witness_verified"] = witness_ok;
  if (!o.write_coloring.empty()) write_coloring_file(o.write_coloring, chi.witness, rec);
  rec["wall_ms"] = clock.ms();
  const Verdict v = !witness_ok ? Verdict::fail : chi.exact() ? Verdict::pass : Verdict::inconclusive;
  return emit(ctx, rec, o.out, v);
}

struct CountOpts {
  InstanceOptions inst;
  ListOptions lists;
  std::string out;
  int t = 1;
  long node_cap = 50'000'000;
  int jobs = 0;
};

int run_count(const CountOpts& o, Context& ctx) {
  Stopwatch clock;
  json rec = record("count");
  const ConflictInstance inst = load_instance(o.inst, rec["inputs"]);
  const ListAssignment lists = load_list_option(o.lists, inst.num_vertices(), rec["inputs"]);
  const CountResult c = count_pcf_colorings(inst, lists, o.t, o.node_cap, jobs_from(o.jobs));
  rec["t"] = o.t;
  rec["count"] = c.count.get_str();
  rec["complete"] = c.complete;
  rec["nodes"] = c.nodes;
  rec["wall_ms"] = clock.ms();
  return emit(ctx, rec, o.out, c.complete ? Verdict::pass : Verdict::inconclusive);
}

struct RosenfeldOpts {
  CountOpts base;
  std::string beta;
};

int run_rosenfeld(const RosenfeldOpts& o, Context& ctx) {
  Stopwatch clock;
  json rec = record("rosenfeld-check");
  const ConflictInstance inst = load_instance(o.base.inst, rec["inputs"]);
  const ListAssignment lists = load_list_option(o.base.lists, inst.num_vertices(), rec["inputs"]);
  const Rational beta = parse_rational(o.beta);
  const RosenfeldReport r = rosenfeld_check(inst, lists, beta, o.base.t, o.base.node_cap, jobs_from(o.base.jobs));
  rec["beta"] = rational_json(beta);
  rec["t"] = o.base.t;
  rec["required_list_size"] = rational_json(r.required);
  rec["min_list_size"] = r.min_list_size;
  if (r.verdict != Verdict::premise_not_met) {
    rec["count"] = r.count.count.get_str();
    rec["complete"] = r.count.complete;
    rec["nodes"] = r.count.nodes;
  }
  rec["wall_ms"] = clock.ms();
  return emit(ctx, rec, o.base.out, r.verdict);
}

struct SampleOpts {
  InstanceOptions inst;
  ListOptions lists;
  std::string out, write_coloring;
  int t = 1;
  std::uint64_t seed = 0;
  int restart_cap = 200;
  long node_cap = 1'000'000;
  int bichromatic = 0;
};

int run_sample(const SampleOpts& o, Context& ctx) {
  Stopwatch clock;
  json rec = record("sample");
  rec["outputs"] = json::array();
  const ConflictInstance inst = load_instance(o.inst, rec["inputs"]);
  const ListAssignment lists = load_list_option(o.lists, inst.num_vertices(), rec["inputs"]);
  SolverConfig cfg;
  cfg.t = o.t;
  cfg.seed = o.seed;
  cfg.restart_cap = o.restart_cap;
  cfg.node_cap = o.node_cap;
  const SampleResult s = sample_pcf(inst, lists, cfg);
  rec["seed"] = o.seed;
  rec["t"] = o.t;
  rec["success"] = s.coloring.has_value();
  rec["restarts"] = s.restarts;
  rec["nodes"] = s.nodes;
  Verdict v = Verdict::inconclusive;
  if (s.coloring) {
    bool ok = is_pcf(inst, *s.coloring, &lists, o.t);
    rec["colors_used"] = colors_used(*s.coloring);
    if (o.bichromatic > 0) {
      const bool paths = bichromatic_paths_ok(inst.graph, *s.coloring, o.bichromatic);
      rec["bichromatic_paths_ok"] = paths;
      ok = ok && paths;
    }
    if (!o.write_coloring.empty()) write_coloring_file(o.write_coloring, *s.coloring, rec);
    v = ok ? Verdict::pass : Verdict::fail;
  } else if (s.restarts < cfg.restart_cap) {
    rec["infeasible"] = true;
    v = Verdict::fail;
  }
  rec["wall_ms"] = clock.ms();
  return emit(ctx, rec, o.out, v);
}

struct ReduceOpts {
  std::string graph, out, kernel_out, kernel_coloring, write_coloring;
  ListOptions lists;
  std::optional<std::uint64_t> seed;
};

int run_reduce(const ReduceOpts& o, Context& ctx) {
  Stopwatch clock;
  json rec = record("reduce");
  rec["outputs"] = json::array();
  const Graph g = io::load_graph(o.graph);
  rec["inputs"].push_back(input_entry(o.graph));
  const LowDegreeReduction red = reduce_low_degree(g);
  rec["n"] = g.num_vertices();
  rec["kernel_vertices"] = vertices_json(red.kernel_vertices);
  json trace = json::array();
  for (const auto& step : red.trace) {
    trace.push_back({{"removed", step.removed + 1},
                     {"neighbors", vertices_json(step.neighbors)},
                     {"added_edge", step.added_edge}});
  }
  rec["trace"] = trace;
  if (!o.kernel_out.empty()) {
    std::ostringstream ss;
    io::write_graph(ss, red.kernel);
    write_text(o.kernel_out, ss.str());
    rec["outputs"].push_back(o.kernel_out);
  }
  Verdict verdict = Verdict::pass;
  const bool replay = !o.lists.lists.empty() || o.lists.palette > 0;
  if (replay) {
    const ListAssignment lists = load_list_option(o.lists, g.num_vertices(), rec["inputs"]);
    const ConflictInstance kernel_inst(red.kernel, neighborhood_hypergraph(red.kernel));
    std::vector<std::vector<Color>> kernel_lists;
    for (Vertex v : red.kernel_vertices) kernel_lists.push_back(lists[v]);
    Coloring kernel_phi;
    if (!o.kernel_coloring.empty()) {
      rec["inputs"].push_back(input_entry(o.kernel_coloring));
      kernel_phi = io::load_coloring(o.kernel_coloring, red.kernel.num_vertices());
    } else {
      if (!o.seed) throw UsageError("--seed is required to color the kernel (or pass --kernel-coloring)");
      SolverConfig cfg;
      cfg.seed = *o.seed;
      rec["seed"] = *o.seed;
      const SampleResult s = sample_pcf(kernel_inst, ListAssignment(kernel_lists), cfg);
      if (!s.coloring) {
        rec["replay"] = {{"success", false}, {"message", "could not color the kernel"}};
        rec["wall_ms"] = clock.ms();
        return emit(ctx, rec, o.out, Verdict::inconclusive);
      }
      kernel_phi = *s.coloring;
    }
    const ListAssignment klists(kernel_lists);
    if (!is_pcf(kernel_inst, kernel_phi, &klists)) {
      throw ParameterError("kernel coloring is not a PCF L-coloring of the kernel");
    }
    const ReplayResult r = replay_extension(g, red, kernel_phi, lists);
    json rep = {{"success", r.coloring.has_value()}};
    if (r.blocking) {
      rep["blocking_vertex"] = *r.blocking + 1;
      rep["message"] = r.message;
      verdict = Verdict::fail;
    } else {
      const bool ok = is_pcf(ConflictInstance(g, neighborhood_hypergraph(g)), *r.coloring, &lists);
      rep["verified"] = ok;
      verdict = ok ? Verdict::pass : Verdict::fail;
      if (!o.write_coloring.empty()) write_coloring_file(o.write_coloring, *r.coloring, rec);
    }
    rec["replay"] = rep;
  }
  rec["wall_ms"] = clock.ms();
  return emit(ctx, rec, o.out, verdict);
}

struct GenOpts {
  std::string kind, out, hypergraph_out, hypergraph = "auto-neighborhood";
  int n = 0;
  int k = 0;
  double p = -1.0;
  std::optional<std::uint64_t> seed;
};

int run_gen(const GenOpts& o, Context& ctx) {
  GraphKind kind;
  const bool random = o.kind == "gnp" || o.kind == "regular";
  if (random && !o.seed) throw UsageError("--seed is required for --kind " + o.kind);
  if (o.kind == "cycle") {
    kind = gen::Cycle{o.n};
  } else if (o.kind == "complete") {
    kind = gen::Complete{o.n};
  } else if (o.kind == "gnp") {
    if (o.p < 0) throw UsageError("--p is required for --kind gnp");
    kind = gen::Gnp{o.n, o.p};
  } else {
    if (o.k <= 0) throw UsageError("--k is required for --kind regular");
    kind = gen::RandomRegular{o.n, o.k};
  }
  const Graph g = generate(kind, o.seed.value_or(0));
  std::ostringstream text;
  io::write_graph(text, g);
  if (o.out.empty()) {
    ctx.out << text.str();
    return 0;
  }
  json rec = record("gen");
  rec["outputs"] = json::array();
  write_text(o.out, text.str());
  rec["outputs"].push_back(o.out);
  rec["kind"] = o.kind;
  rec["n"] = g.num_vertices();
  rec["m"] = g.num_edges();
  if (o.seed) rec["seed"] = *o.seed;
  if (!o.hypergraph_out.empty()) {
    json ignored = json::array();
    const Hypergraph h = derive_hypergraph(g, o.hypergraph, ignored);
    std::ostringstream hs;
    io::write_hypergraph(hs, h);
    write_text(o.hypergraph_out, hs.str());
    rec["outputs"].push_back(o.hypergraph_out);
    rec["hyperedges"] = h.num_edges();
  }
  return emit(ctx, rec, "", Verdict::pass);
}

}  // namespace

void register_coloring_commands(CLI::App& app, Context& ctx) {
  add_command<VerifyOpts>(
      app, ctx, "verify", "check a coloring or (a:b)-coloring",
      [](CLI::App* sub, VerifyOpts& o) {
        add_instance_options(sub, o.inst);
        add_list_options(sub, o.lists);
        auto* c = sub->add_option("--coloring", o.coloring, "coloring file");
        auto* s = sub->add_option("--set-coloring", o.set_coloring, "(a:b)-coloring file");
        c->excludes(s);
        sub->add_option("--t", o.t, "conflict multiplicity bound")->check(CLI::PositiveNumber);
        sub->add_option("--bichromatic", o.bichromatic, "also require bichromatic components to be paths on <= N vertices");
        sub->add_option("--out", o.out, "write the JSON record here");
      },
      [](const VerifyOpts& o, Context& c) {
        if (o.coloring.empty() && o.set_coloring.empty()) throw UsageError("one of --coloring or --set-coloring is required");
        return run_verify(o, c);
      });

  add_command<GreedyOpts>(
      app, ctx, "greedy", "degeneracy-order PCF coloring",
      [](CLI::App* sub, GreedyOpts& o) {
        add_instance_options(sub, o.inst);
        sub->add_option("--write-coloring", o.write_coloring, "coloring output file");
        sub->add_option("--out", o.out, "write the JSON record here");
      },
      run_greedy);

  add_command<ExactOpts>(
      app, ctx, "exact", "exact PCF chromatic number",
      [](CLI::App* sub, ExactOpts& o) {
        add_instance_options(sub, o.inst);
        sub->add_option("--t", o.t)->check(CLI::PositiveNumber);
        sub->add_option("--node-cap", o.node_cap, "search node budget")->check(CLI::PositiveNumber);
        sub->add_option("--write-coloring", o.write_coloring, "witness coloring output file");
        sub->add_option("--out", o.out, "write the JSON record here");
      },
      run_exact);

  auto count_setup = [](CLI::App* sub, CountOpts& o) {
    add_instance_options(sub, o.inst);
    add_list_options(sub, o.lists);
    sub->add_option("--t", o.t)->check(CLI::PositiveNumber);
    sub->add_option("--node-cap", o.node_cap, "search node budget")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", o.jobs, "worker threads");
    sub->add_option("--out", o.out, "write the JSON record here");
  };
  add_command<CountOpts>(app, ctx, "count", "count PCF list colorings", count_setup, run_count);
  add_command<RosenfeldOpts>(
      app, ctx, "rosenfeld-check", "compare the coloring count with beta^n",
      [count_setup](CLI::App* sub, RosenfeldOpts& o) {
        count_setup(sub, o.base);
        sub->add_option("--beta", o.beta, "beta as p/q or a decimal")->required();
      },
      run_rosenfeld);

  add_command<SampleOpts>(
      app, ctx, "sample", "randomized backtracking PCF list coloring",
      [](CLI::App* sub, SampleOpts& o) {
        add_instance_options(sub, o.inst);
        add_list_options(sub, o.lists);
        sub->add_option("--seed", o.seed)->required();
        sub->add_option("--t", o.t)->check(CLI::PositiveNumber);
        sub->add_option("--restart-cap", o.restart_cap)->check(CLI::PositiveNumber);
        sub->add_option("--node-cap", o.node_cap, "search nodes per restart")->check(CLI::PositiveNumber);
        sub->add_option("--bichromatic", o.bichromatic, "also require bichromatic components to be paths on <= N vertices");
        sub->add_option("--write-coloring", o.write_coloring, "coloring output file");
        sub->add_option("--out", o.out, "write the JSON record here");
      },
      run_sample);

  add_command<ReduceOpts>(
      app, ctx, "reduce", "remove vertices of degree <= 2 and replay the extension",
      [](CLI::App* sub, ReduceOpts& o) {
        sub->add_option("--graph", o.graph, "graph file")->required();
        add_list_options(sub, o.lists);
        sub->add_option("--kernel-coloring", o.kernel_coloring, "PCF coloring of the kernel");
        sub->add_option("--seed", o.seed, "seed for coloring the kernel");
        sub->add_option("--kernel-out", o.kernel_out, "kernel graph output file");
        sub->add_option("--write-coloring", o.write_coloring, "extended coloring output file");
        sub->add_option("--out", o.out, "write the JSON record here");
      },
      run_reduce);

  add_command<GenOpts>(
      app, ctx, "gen", "generate a graph",
      [](CLI::App* sub, GenOpts& o) {
        sub->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"gnp", "cycle", "complete", "regular"}));
        sub->add_option("--n", o.n)->required();
        sub->add_option("--p", o.p, "edge probability for gnp");
        sub->add_option("--k", o.k, "degree for regular");
        sub->add_option("--seed", o.seed);
        sub->add_option("--out", o.out, "graph output file (stdout when omitted)");
        sub->add_option("--hypergraph-out", o.hypergraph_out, "also write a derived hypergraph");
        sub->add_option("--hypergraph", o.hypergraph, "auto-neighborhood or auto-star-linear")
            ->check(CLI::IsMember({"auto-neighborhood", "auto-star-linear"}));
      },
      run_gen);
}

}  // namespace pcf::cli
