#pragma once

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "respan/connectivity.hpp"
#include "respan/fragility.hpp"
#include "respan/generators.hpp"
#include "respan/graph.hpp"
#include "respan/io.hpp"
#include "respan/resilient.hpp"
#include "respan/spanner.hpp"

#include "CLI11.hpp"

namespace respan {

namespace cli_detail {

inline int thread_count_from_env() {
  const char* env = std::getenv("RESPAN_THREADS");
  if (!env) return 1;
  int t = std::atoi(env);
  return t < 1 ? 1 : t;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline void deliver(const std::string& content, const std::string& path, std::ostream& fallback) {
  if (path.empty())
    fallback << content;
  else
    write_file(path, content);
}

inline json edge_json(const Graph::Edge& e, bool with_weight) {
  json j = json::array({e.u, e.v});
  if (with_weight) j.push_back(e.w);
  return j;
}

inline json spanner_sizes(const Graph& g, const Graph& s) {
  return json{{"n", g.vertex_count()},
              {"host_edges", g.edge_count()},
              {"spanner_edges", s.edge_count()}};
}

/// Base-spanner selector strings: "greedy:T", "additive2", "ft:T:F".
struct BaseSpec {
  enum class Kind { Greedy, Additive2, FaultTolerant } kind = Kind::Greedy;
  double stretch = 3.0;
  int faults = 1;

  static BaseSpec parse(const std::string& text) {
    BaseSpec b;
    if (text == "additive2") {
      b.kind = Kind::Additive2;
      return b;
    }
    auto starts_with = [&text](const char* p) { return text.rfind(p, 0) == 0; };
    try {
      if (starts_with("greedy:")) {
        b.kind = Kind::Greedy;
        b.stretch = std::stod(text.substr(7));
        return b;
      }
      if (starts_with("ft:")) {
        b.kind = Kind::FaultTolerant;
        std::size_t sep = text.find(':', 3);
        if (sep == std::string::npos) throw std::invalid_argument(text);
        b.stretch = std::stod(text.substr(3, sep - 3));
        b.faults = std::stoi(text.substr(sep + 1));
        return b;
      }
    } catch (const std::exception&) {
      // fall through to the uniform error below
    }
    throw CLI::ValidationError("--base", "expected greedy:T, additive2, or ft:T:F");
  }

  Spanner build(const Graph& g) const {
    switch (kind) {
      case Kind::Greedy:
        return greedy_spanner(g, stretch);
      case Kind::Additive2:
        return additive2_spanner(g);
      case Kind::FaultTolerant:
        return fault_tolerant_spanner(g, stretch, faults);
    }
    throw std::logic_error("unreachable");
  }

  std::string describe() const {
    switch (kind) {
      case Kind::Greedy:
        return "greedy:" + format_double(stretch);
      case Kind::Additive2:
        return "additive2";
      case Kind::FaultTolerant:
        return "ft:" + format_double(stretch) + ":" + std::to_string(faults);
    }
    return "";
  }
};

inline json cycle_stats_json(const CycleUnionStats& st) {
  json per = json::array();
  for (const auto& pc : st.per_cycle)
    per.push_back(json{{"old", pc.old_count}, {"new", pc.new_count}, {"cross", pc.cross_count}});
  return json{{"cycles", static_cast<int>(st.per_cycle.size())},
              {"union_edges", st.union_edges},
              {"union_new", st.union_new},
              {"union_cross", st.union_cross},
              {"vertices_touched", st.vertices_touched},
              {"per_cycle", per}};
}

inline json partition_json(const FragilityPartition& p) {
  return json{{"low", static_cast<int>(p.low.size())},
              {"mid", static_cast<int>(p.mid.size())},
              {"high", static_cast<int>(p.high.size())},
              {"log2_n_threshold", p.log_threshold}};
}

struct GenOptions {
  std::string family;
  std::vector<int> params;
  std::string out;
  std::string spanner_out;
  std::uint64_t seed = 1;
  std::string weights;  // "MIN:MAX"
};

inline int run_gen(const GenOptions& o) {
  auto need = [&o](std::size_t k) {
    if (o.params.size() != k)
      throw CLI::ValidationError("gen", "family '" + o.family + "' takes " + std::to_string(k) +
                                            " integer parameter(s)");
  };
  Graph g;
  std::string spanner_text;
  if (o.family == "cycle") {
    need(1);
    g = gen_cycle(o.params[0]);
  } else if (o.family == "path") {
    need(1);
    g = gen_path(o.params[0]);
  } else if (o.family == "complete") {
    need(1);
    g = gen_complete(o.params[0]);
  } else if (o.family == "grid") {
    need(2);
    g = gen_grid(o.params[0], o.params[1]);
  } else if (o.family == "star") {
    need(1);
    g = gen_star(o.params[0]);
  } else if (o.family == "random") {
    need(2);
    int wmin = 1, wmax = 1;
    if (!o.weights.empty()) {
      std::size_t sep = o.weights.find(':');
      if (sep == std::string::npos)
        throw CLI::ValidationError("--weights", "expected MIN:MAX");
      wmin = std::stoi(o.weights.substr(0, sep));
      wmax = std::stoi(o.weights.substr(sep + 1));
    }
    g = gen_random(o.params[0], o.params[1], o.seed, wmin, wmax);
  } else if (o.family == "intersection-complement") {
    need(1);
    g = gen_intersection_complement(o.params[0]);
  } else if (o.family == "gadget") {
    need(1);
    FragilityGapGadget gg = gen_fragility_gap_gadget(o.params[0]);
    g = gg.g;
    spanner_text = serialize_edge_list(gg.s.subgraph);
  } else {
    throw CLI::ValidationError(
        "gen", "unknown family '" + o.family +
                   "' (expected cycle, path, complete, grid, star, random, "
                   "intersection-complement, or gadget)");
  }
  deliver(serialize_edge_list(g), o.out, std::cout);
  if (!o.spanner_out.empty()) {
    if (spanner_text.empty())
      throw CLI::ValidationError("--spanner-out", "only the gadget family emits a spanner");
    write_file(o.spanner_out, spanner_text);
  }
  return 0;
}

struct FragilityOptions {
  std::string in;
  double sigma = -1.0;  // < 0: no threshold analysis
  bool per_edge = false;
  std::string report_path;
};

inline int run_fragility(const FragilityOptions& o) {
  Stopwatch timer;
  Graph g = parse_edge_list(read_file(o.in));
  FragilityMap fm = all_fragilities(g, thread_count_from_env());

  Report rep;
  rep.operation = "fragility";
  rep.input = json{{"file", o.in}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
  rep.results["histogram"] = fragility_histogram(fm);
  int bridge_count = 0;
  for (const Fragility& f : fm)
    if (f.is_infinite()) ++bridge_count;
  rep.results["bridges"] = bridge_count;
  if (o.per_edge) {
    json edges = json::array();
    for (int id = 0; id < g.edge_count(); ++id) {
      const Graph::Edge& e = g.edge(id);
      const Fragility& f = fm[static_cast<std::size_t>(id)];
      edges.push_back(json{{"u", e.u},
                           {"v", e.v},
                           {"fragility", f.is_infinite() ? json("inf") : json(f.value())}});
    }
    rep.results["edges"] = edges;
  }

  bool verdict = true;
  if (o.sigma >= 0.0) {
    rep.params["sigma"] = o.sigma;
    Graph high = high_fragility_subgraph(g, o.sigma, fm);
    Distance hop_girth = girth_hops(high);
    verdict = check_girth_bound(g, o.sigma, fm);
    rep.results["high_fragility_edges"] = high.edge_count();
    rep.results["high_fragility_hop_girth"] =
        hop_girth.is_unreachable() ? json("inf") : json(hop_girth.value());
    rep.results["girth_bound_holds"] = verdict;
  }
  rep.timings_ms["total"] = timer.ms();
  deliver(emit_report(rep), o.report_path, std::cout);
  return verdict ? 0 : 1;
}

struct SpannerOptions {
  std::string in;
  double stretch = -1.0;
  bool additive2 = false;
  double ft_stretch = -1.0;
  int ft_faults = 1;
  std::string out;
  std::string report_path;
};

inline int run_spanner(const SpannerOptions& o) {
  int modes = (o.stretch >= 0.0) + (o.additive2 ? 1 : 0) + (o.ft_stretch >= 0.0);
  if (modes != 1)
    throw CLI::ValidationError(
        "spanner", "choose exactly one of --stretch, --additive2, --fault-tolerant");
  Stopwatch timer;
  Graph g = parse_edge_list(read_file(o.in));
  Spanner s;
  json params;
  if (o.stretch >= 0.0) {
    s = greedy_spanner(g, o.stretch);
    params = json{{"mode", "greedy"}, {"stretch", o.stretch}};
  } else if (o.additive2) {
    s = additive2_spanner(g);
    params = json{{"mode", "additive2"}};
  } else {
    s = fault_tolerant_spanner(g, o.ft_stretch, o.ft_faults);
    params = json{{"mode", "fault-tolerant"}, {"stretch", o.ft_stretch}, {"faults", o.ft_faults}};
  }
  SpannerCheck check = verify_spanner(g, s);

  if (!o.out.empty()) write_file(o.out, serialize_edge_list(s.subgraph));
  Report rep;
  rep.operation = "spanner";
  rep.input = json{{"file", o.in}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
  rep.params = params;
  rep.params["alpha"] = s.alpha;
  rep.params["beta"] = s.beta;
  rep.results["sizes"] = spanner_sizes(g, s.subgraph);
  rep.results["stretch_ok"] = check.ok;
  rep.timings_ms["total"] = timer.ms();
  deliver(emit_report(rep), o.report_path, std::cout);
  return check.ok ? 0 : 1;
}

struct ResilientOptions {
  std::string in;
  double sigma = 3.0;
  std::string base = "greedy:3";
  std::string out;
  std::string report_path;
};

inline int run_resilient(const ResilientOptions& o) {
  Stopwatch timer;
  Graph g = parse_edge_list(read_file(o.in));
  BaseSpec spec = BaseSpec::parse(o.base);
  int threads = thread_count_from_env();

  // A base whose stretch guarantee exceeds sigma cannot be made
  // sigma-resilient; fall back to a greedy sigma-spanner when possible.
  bool substituted = false;
  double base_guarantee = spec.kind == BaseSpec::Kind::Additive2 ? 3.0 : spec.stretch;
  if (base_guarantee > o.sigma + kDistEps) {
    if (o.sigma < 3.0)
      throw CLI::ValidationError(
          "--sigma", "no supported base spanner has stretch guarantee within sigma < 3");
    spec = BaseSpec::parse("greedy:" + format_double(o.sigma));
    substituted = true;
  }

  Spanner s = spec.build(g);
  ResilientSpanner r = make_resilient(g, s, o.sigma, threads);
  ResilienceCheck check = verify_resilient(g, r, threads);
  SpannerCheck base_check = verify_spanner(g, s);
  CycleUnionStats stats = cycle_union_stats(r.cycles);
  FragilityPartition classes = fragility_classes(g, s.subgraph, o.sigma);

  if (!o.out.empty()) write_file(o.out, serialize_edge_list(r.result));
  Report rep;
  rep.operation = "resilient";
  rep.input = json{{"file", o.in}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
  rep.params = json{{"sigma", o.sigma}, {"base", spec.describe()}};
  if (substituted) {
    rep.params["requested_base"] = o.base;
    rep.params["base_substituted"] = true;
  }
  rep.results["sizes"] = json{{"n", g.vertex_count()},
                              {"host_edges", g.edge_count()},
                              {"base_edges", s.subgraph.edge_count()},
                              {"added_edges", static_cast<int>(r.added.size())},
                              {"result_edges", r.result.edge_count()}};
  json added = json::array();
  bool weighted = !g.unit_weights();
  for (const Graph::Edge& e : r.added) added.push_back(edge_json(e, weighted));
  rep.results["added"] = added;
  rep.results["cycle_stats"] = cycle_stats_json(stats);
  rep.results["fragility_classes"] = partition_json(classes);
  rep.results["new_union_within_2n"] = stats.union_new <= 2 * g.vertex_count();
  rep.results["base_stretch_ok"] = base_check.ok;
  rep.results["resilient"] = check.resilient;
  rep.timings_ms["total"] = timer.ms();
  deliver(emit_report(rep), o.report_path, std::cout);
  return check.resilient && base_check.ok ? 0 : 1;
}

struct VerifyOptions {
  std::string in;
  std::string candidate;
  std::string mode;
  double alpha = 1.0;
  double beta = 0.0;
  double stretch = 3.0;
  int faults = 1;
  double sigma = 3.0;
  std::string report_path;
};

inline int run_verify(const VerifyOptions& o) {
  Stopwatch timer;
  Graph g = parse_edge_list(read_file(o.in));
  Graph s = parse_edge_list(read_file(o.candidate));
  Report rep;
  rep.operation = "verify";
  rep.input = json{{"host", o.in}, {"candidate", o.candidate}};
  bool verdict = false;

  if (o.mode == "spanner") {
    rep.params = json{{"mode", "spanner"}, {"alpha", o.alpha}, {"beta", o.beta}};
    SpannerCheck c = verify_spanner(g, s, o.alpha, o.beta);
    verdict = c.ok;
    rep.results["ok"] = c.ok;
    if (!c.ok)
      rep.results["witness"] = json{{"x", c.x},
                                    {"y", c.y},
                                    {"dist_candidate", c.dist_s.value_or_inf()},
                                    {"dist_host", c.dist_g.value()},
                                    {"allowed", c.allowed}};
  } else if (o.mode == "fault") {
    rep.params = json{{"mode", "fault"}, {"stretch", o.stretch}, {"faults", o.faults}};
    FaultCheck c = verify_fault_tolerance(g, s, o.stretch, o.faults);
    verdict = c.ok;
    rep.results["ok"] = c.ok;
    if (!c.ok) {
      json faults = json::array();
      for (int id : c.faults) faults.push_back(edge_json(g.edge(id), false));
      rep.results["witness"] = json{{"failed_edges", faults},
                                    {"x", c.x},
                                    {"y", c.y},
                                    {"dist_candidate", c.dist_s.value_or_inf()},
                                    {"dist_host", c.dist_g.value()}};
    }
  } else if (o.mode == "resilient") {
    rep.params = json{{"mode", "resilient"}, {"sigma", o.sigma}};
    ResilienceCheck c = verify_resilient(g, s, o.sigma, thread_count_from_env());
    verdict = c.resilient;
    rep.results["ok"] = c.resilient;
    if (!c.resilient) {
      json v = json::array();
      for (const ResilienceViolation& violation : c.violations)
        v.push_back(json{{"edge", edge_json(violation.edge, false)},
                         {"fragility_in_candidate", violation.in_result.is_infinite()
                                                        ? json("inf")
                                                        : json(violation.in_result.value())},
                         {"fragility_in_host", violation.in_host.is_infinite()
                                                   ? json("inf")
                                                   : json(violation.in_host.value())}});
      rep.results["violations"] = v;
    }
  } else {
    throw CLI::ValidationError("--mode", "expected spanner, fault, or resilient");
  }
  rep.timings_ms["total"] = timer.ms();
  deliver(emit_report(rep), o.report_path, std::cout);
  return verdict ? 0 : 1;
}

struct ExperimentOptions {
  std::string suite;
  std::vector<int> sizes = {64, 128, 256};
  int seeds = 3;
  double sigma = 3.0;
  std::string report_path;
};

inline int run_experiment(const ExperimentOptions& o) {
  Stopwatch timer;
  int threads = thread_count_from_env();
  Report rep;
  rep.operation = "experiment";
  rep.params = json{{"suite", o.suite},
                    {"sizes", o.sizes},
                    {"seeds", o.seeds},
                    {"sigma", o.sigma}};
  json rows = json::array();

  if (o.suite == "resilient-size") {
    double max_ratio = 0.0;
    bool all_new_ok = true;
    for (int n : o.sizes) {
      for (int seed = 0; seed < o.seeds; ++seed) {
        Graph g = gen_random(n, 4 * n, static_cast<std::uint64_t>(seed) + 1);
        Spanner s = greedy_spanner(g, std::max(3.0, o.sigma));
        ResilientSpanner r = make_resilient(g, s, o.sigma, threads);
        CycleUnionStats st = cycle_union_stats(r.cycles);
        double ratio = r.result.edge_count() / std::pow(n, 1.5);
        max_ratio = std::max(max_ratio, ratio);
        bool new_ok = st.union_new <= 2 * n;
        all_new_ok = all_new_ok && new_ok;
        rows.push_back(json{{"n", n},
                            {"seed", seed},
                            {"host_edges", g.edge_count()},
                            {"base_edges", s.subgraph.edge_count()},
                            {"result_edges", r.result.edge_count()},
                            {"added_edges", static_cast<int>(r.added.size())},
                            {"result_over_n_pow_1_5", ratio},
                            {"union_new", st.union_new},
                            {"union_cross", st.union_cross},
                            {"new_within_2n", new_ok}});
      }
    }
    rep.results["rows"] = rows;
    rep.results["max_result_over_n_pow_1_5"] = max_ratio;
    rep.results["all_new_within_2n"] = all_new_ok;
  } else if (o.suite == "girth-bound") {
    bool all_hold = true;
    for (int n : o.sizes) {
      for (int seed = 0; seed < o.seeds; ++seed) {
        Graph g = gen_random(n, 3 * n, static_cast<std::uint64_t>(seed) + 1);
        FragilityMap fm = all_fragilities(g, threads);
        for (int sigma = 2; sigma <= 6; ++sigma) {
          Graph high = high_fragility_subgraph(g, sigma, fm);
          Distance girth_d = girth_hops(high);
          bool holds = check_girth_bound(g, sigma, fm);
          all_hold = all_hold && holds;
          rows.push_back(json{{"n", n},
                              {"seed", seed},
                              {"sigma", sigma},
                              {"high_fragility_edges", high.edge_count()},
                              {"hop_girth", girth_d.is_unreachable() ? json("inf")
                                                                     : json(girth_d.value())},
                              {"holds", holds}});
        }
      }
    }
    rep.results["rows"] = rows;
    rep.results["all_hold"] = all_hold;
  } else if (o.suite == "fragility-classes") {
    for (int n : o.sizes) {
      for (int seed = 0; seed < o.seeds; ++seed) {
        Graph g = gen_random(n, 4 * n, static_cast<std::uint64_t>(seed) + 1);
        Spanner s = greedy_spanner(g, std::max(3.0, o.sigma));
        FragilityPartition p = fragility_classes(g, s.subgraph, o.sigma);
        rows.push_back(json{{"n", n},
                            {"seed", seed},
                            {"base_edges", s.subgraph.edge_count()},
                            {"low", static_cast<int>(p.low.size())},
                            {"mid", static_cast<int>(p.mid.size())},
                            {"high", static_cast<int>(p.high.size())}});
      }
    }
    rep.results["rows"] = rows;
  } else {
    throw CLI::ValidationError(
        "--suite", "expected resilient-size, girth-bound, or fragility-classes");
  }
  rep.timings_ms["total"] = timer.ms();
  deliver(emit_report(rep), o.report_path, std::cout);
  return 0;
}

}  // namespace cli_detail

/// Entry point shared by the binary and the tests. Returns the process
/// exit code: 0 success / verdict true, 1 verdict false, 2 usage or input
/// errors.
inline int run_cli(std::vector<std::string> args) {
  CLI::App app{"spanners, edge fragility, and resilient spanner repair"};
  app.require_subcommand(1);

  cli_detail::GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a graph family as an edge list");
  gen_cmd->add_option("family", gen.family,
                      "cycle | path | complete | grid | star | random | "
                      "intersection-complement | gadget")
      ->required();
  gen_cmd->add_option("params", gen.params, "integer family parameters");
  gen_cmd->add_option("-o,--out", gen.out, "output file (stdout if omitted)");
  gen_cmd->add_option("--spanner-out", gen.spanner_out,
                      "companion spanner output (gadget family only)");
  gen_cmd->add_option("--seed", gen.seed, "random seed (random family)");
  gen_cmd->add_option("--weights", gen.weights, "integer weight range MIN:MAX (random family)");

  cli_detail::FragilityOptions frag;
  CLI::App* frag_cmd =
      app.add_subcommand("fragility", "per-edge fragility map and histogram");
  frag_cmd->add_option("-i,--in", frag.in, "input edge list")->required();
  frag_cmd->add_option("--sigma", frag.sigma,
                       "also analyze the subgraph of edges with fragility above this threshold");
  frag_cmd->add_flag("--per-edge", frag.per_edge, "include per-edge values in the report");
  frag_cmd->add_option("--report", frag.report_path, "write the JSON report here");

  cli_detail::SpannerOptions span;
  CLI::App* span_cmd = app.add_subcommand("spanner", "build a spanner of the input graph");
  span_cmd->add_option("-i,--in", span.in, "input edge list")->required();
  span_cmd->add_option("--stretch", span.stretch, "greedy multiplicative spanner, stretch >= 3");
  span_cmd->add_flag("--additive2", span.additive2, "additive +2 spanner (unit weights)");
  span_cmd->add_option("--fault-tolerant", span.ft_stretch,
                       "fault-tolerant spanner with this stretch");
  span_cmd->add_option("--faults", span.ft_faults, "fault budget for --fault-tolerant")
      ->default_val(1);
  span_cmd->add_option("-o,--out", span.out, "write the spanner edge list here");
  span_cmd->add_option("--report", span.report_path, "write the JSON report here");

  cli_detail::ResilientOptions res;
  CLI::App* res_cmd =
      app.add_subcommand("resilient", "build a base spanner and repair it to resilience");
  res_cmd->add_option("-i,--in", res.in, "input edge list")->required();
  res_cmd->add_option("--sigma", res.sigma, "resilience threshold (>= 2)")->required();
  res_cmd->add_option("--base", res.base, "base spanner: greedy:T | additive2 | ft:T:F")
      ->default_val("greedy:3");
  res_cmd->add_option("-o,--out", res.out, "write the resilient edge list here");
  res_cmd->add_option("--report", res.report_path, "write the JSON report here");

  cli_detail::VerifyOptions ver;
  CLI::App* ver_cmd = app.add_subcommand("verify", "check a candidate subgraph against the host");
  ver_cmd->add_option("-i,--in", ver.in, "host edge list")->required();
  ver_cmd->add_option("-s,--candidate", ver.candidate, "candidate edge list")->required();
  ver_cmd->add_option("--mode", ver.mode, "spanner | fault | resilient")->required();
  ver_cmd->add_option("--alpha", ver.alpha, "multiplicative stretch (spanner mode)");
  ver_cmd->add_option("--beta", ver.beta, "additive stretch (spanner mode)");
  ver_cmd->add_option("--stretch", ver.stretch, "stretch bound (fault mode)");
  ver_cmd->add_option("--faults", ver.faults, "fault budget (fault mode)");
  ver_cmd->add_option("--sigma", ver.sigma, "resilience threshold (resilient mode)");
  ver_cmd->add_option("--report", ver.report_path, "write the JSON report here");

  cli_detail::ExperimentOptions exp;
  CLI::App* exp_cmd = app.add_subcommand("experiment", "run a measurement suite");
  exp_cmd->add_option("--suite", exp.suite,
                      "resilient-size | girth-bound | fragility-classes")
      ->required();
  exp_cmd->add_option("--sizes", exp.sizes, "vertex counts to run");
  exp_cmd->add_option("--seeds", exp.seeds, "seeds per size");
  exp_cmd->add_option("--sigma", exp.sigma, "resilience threshold");
  exp_cmd->add_option("--report", exp.report_path, "write the JSON report here");

  std::vector<const char*> argv;
  argv.push_back("respan");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen_cmd) return cli_detail::run_gen(gen);
    if (*frag_cmd) return cli_detail::run_fragility(frag);
    if (*span_cmd) return cli_detail::run_spanner(span);
    if (*res_cmd) return cli_detail::run_resilient(res);
    if (*ver_cmd) return cli_detail::run_verify(ver);
    if (*exp_cmd) return cli_detail::run_experiment(exp);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace respan
