// zflow: census, solve, gadget, verify, and generate subcommands over the
// canonical multigraph text format. --json output is stable for a given
// invocation and seed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zflow/harness.hpp"

using nlohmann::json;
using namespace zflow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

Multigraph load_graph(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open " + path);
  return parse_graph(in);
}

Boundary parse_beta(const std::string& csv, int n) {
  Boundary beta = Boundary::zero(n);
  std::istringstream in(csv);
  std::string item;
  int i = 0;
  while (std::getline(in, item, ',')) {
    if (i >= n) throw invalid_argument_error("too many boundary values");
    int v = std::stoi(item);
    if (v < 0 || v > 2)
      throw invalid_argument_error("boundary values must be 0, 1 or 2");
    beta.value[i++] = static_cast<std::uint8_t>(v);
  }
  if (i != n) throw invalid_argument_error("expected one boundary value per vertex");
  return beta;
}

json orientation_json(const Multigraph& g, const Orientation& d) {
  json arr = json::array();
  for (int e = 0; e < g.edge_count(); ++e)
    arr.push_back({e, tail(g, d, e), head(g, d, e)});
  return arr;
}

json flow_json(const Multigraph& g, const FlowAssignment& fa) {
  json arr = json::array();
  for (int e = 0; e < g.edge_count(); ++e) arr.push_back({e, fa.value[e]});
  return arr;
}

json boundary_json(const Boundary& beta) {
  json arr = json::array();
  for (int v = 0; v < beta.size(); ++v) arr.push_back(beta.at(v));
  return arr;
}

json doc(const std::string& command) {
  return json{{"schema", "zflow/1"}, {"command", command}};
}

void emit(const json& out, bool as_json) {
  if (as_json) {
    std::cout << out.dump(2) << "\n";
    return;
  }
  // line-oriented human format
  for (auto& [key, value] : out.items()) {
    if (key == "schema" || key == "command") continue;
    std::cout << key << ": " << value.dump() << "\n";
  }
}

int run_census(const std::string& file, int max_size, bool as_json) {
  Multigraph g = load_graph(file);
  CutCensus census = enumerate_cuts(g, max_size);
  json out = doc("census");
  out["edge_connectivity"] = census.edge_connectivity;
  json counts = json::object();
  for (auto& [size, count] : census.counts_by_size)
    counts[std::to_string(size)] = count;
  out["counts_by_size"] = counts;
  json cuts = json::array();
  for (const Cut& c : census.cuts)
    cuts.push_back({{"edges", c.edges}, {"witness", c.witness.vertices()}});
  out["cuts"] = cuts;
  emit(out, as_json);
  return kExitOk;
}

int run_solve(const std::string& file, const std::string& mode,
              const std::string& beta_csv, int k, bool as_json) {
  Multigraph g = load_graph(file);
  json out = doc("solve");
  out["mode"] = mode;
  if (mode == "mod3" || mode == "nz3" || mode == "beta") {
    Boundary beta = mode == "beta" ? parse_beta(beta_csv, g.vertex_count())
                                   : Boundary::zero(g.vertex_count());
    if (mode == "beta" && !beta.sum_is_zero())
      throw invalid_argument_error("boundary values must sum to 0 mod 3");
    Certificate cert = find_beta_orientation(g, beta);
    out["exists"] = cert.exists();
    out["nodes_searched"] = cert.stats.nodes;
    if (cert.exists()) {
      out["orientation"] = orientation_json(g, *cert.orientation);
      if (mode == "nz3") {
        FlowAssignment fa = orientation_to_nz3flow(g, *cert.orientation);
        out["orientation"] = orientation_json(g, fa.orientation);
        out["flow"] = flow_json(g, fa);
      }
    }
  } else if (mode == "z3") {
    Z3Result res = z3_connected(g);
    out["z3_connected"] = res.connected;
    out["nodes_searched"] = res.certificate.stats.nodes;
    if (res.connected) {
      json table = json::array();
      for (const Z3TableEntry& entry : res.certificate.table)
        table.push_back({{"beta", boundary_json(entry.boundary)},
                         {"orientation", orientation_json(g, entry.orientation)}});
      out["table"] = table;
    } else {
      out["counterexample_beta"] = boundary_json(*res.counterexample);
    }
  } else if (mode == "flowpoly") {
    out["k"] = k;
    out["count"] = flow_polynomial(g, k);
  } else {
    std::cerr << "unknown mode: " << mode << "\n";
    return kExitUsage;
  }
  emit(out, as_json);
  return kExitOk;
}

int run_gadget(const std::string& file, const std::string& op,
               const std::string& beta_csv, bool as_json) {
  Multigraph g = load_graph(file);
  json out = doc("gadget");
  out["op"] = op;
  if (op == "glue-k7") {
    GlueResult glued = glue_k7(g);
    out["graph"] = serialize(glued.graph);
    out["vertex_map"] = glued.vertex_map;
    emit(out, as_json);
    return kExitOk;
  }
  Augmentation aug = op == "z0-3flow"
                         ? z0_augment_3flow(g)
                         : z0_augment_z3(g, beta_csv.empty()
                                                ? Boundary::zero(g.vertex_count())
                                                : parse_beta(beta_csv, g.vertex_count()));
  if (op != "z0-3flow" && op != "z0-z3") {
    std::cerr << "unknown op: " << op << "\n";
    return kExitUsage;
  }
  out["graph"] = serialize(aug.augmented);
  out["z0"] = aug.z0;
  out["added_edges"] = aug.added_edges;
  json pre = json::array();
  for (int id : aug.added_edges) {
    int t = aug.pre[id] > 0 ? aug.augmented.edge(id).u : aug.augmented.edge(id).v;
    pre.push_back({id, t, aug.augmented.other_end(id, t)});
  }
  out["pre_orientation"] = pre;
  out["beta"] = boundary_json(aug.beta);
  LtwzReport rep = ltwz_check(aug.augmented, aug.beta, aug.z0, aug.pre);
  out["extension_conditions"] = {{"min_vertices", rep.min_vertices},
                                 {"z0_degree", rep.z0_degree},
                                 {"z0_balance", rep.z0_balance},
                                 {"subsets", rep.subsets}};
  emit(out, as_json);
  return kExitOk;
}

json report_json(const TheoremReport& rep) {
  json clauses = json::object();
  for (const auto& c : rep.hypothesis.clauses) clauses[c.name] = c.holds;
  return json{{"theorem", to_string(rep.theorem)},
              {"hash", rep.hash},
              {"n", rep.n},
              {"m", rep.m},
              {"graph", rep.graph_text},
              {"seed", rep.seed},
              {"hypothesis", clauses},
              {"three_cuts", rep.hypothesis.three_cuts},
              {"five_cuts", rep.hypothesis.five_cuts},
              {"edge_connectivity", rep.hypothesis.edge_connectivity},
              {"strategy", to_string(rep.strategy)},
              {"conclusion", to_string(rep.conclusion)},
              {"strategies_agree", rep.strategies_agree},
              {"nodes_searched", rep.certificate.stats.nodes},
              {"wall_seconds", rep.wall_seconds}};
}

int run_verify(const std::string& theorem, int count, std::uint64_t seed,
               const std::string& strategy, bool as_json, bool as_csv) {
  CampaignConfig cfg;
  cfg.theorem = theorem_from_string(theorem);
  cfg.count = count;
  cfg.seed = seed;
  cfg.strategy = strategy_from_string(strategy);
  CampaignResult res = run_campaign(cfg);
  if (as_csv) {
    std::cout << "theorem,hash,n,m,seed,conclusion,strategies_agree,nodes,wall_seconds\n";
    for (const auto& r : res.reports)
      std::cout << to_string(r.theorem) << ',' << r.hash << ',' << r.n << ','
                << r.m << ',' << r.seed << ',' << to_string(r.conclusion) << ','
                << r.strategies_agree << ',' << r.certificate.stats.nodes << ','
                << r.wall_seconds << "\n";
    return kExitOk;
  }
  json out = doc("verify");
  out["theorem"] = theorem;
  out["count"] = count;
  out["seed"] = seed;
  out["strategy"] = strategy;
  out["generation_failures"] = res.generation_failures;
  out["all_certified"] = res.all_certified();
  json reports = json::array();
  for (const auto& r : res.reports) reports.push_back(report_json(r));
  out["reports"] = reports;
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : res.reports)
      std::cout << to_string(r.theorem) << " " << r.hash << " n=" << r.n
                << " m=" << r.m << " " << to_string(r.conclusion) << "\n";
    std::cout << "all_certified: " << (res.all_certified() ? "yes" : "no")
              << " (generation failures: " << res.generation_failures << ")\n";
  }
  return kExitOk;
}

int run_generate(const std::string& kind, int n, int layers, int extra,
                 std::uint64_t seed, const std::string& theorem) {
  GenSpec spec;
  if (kind == "uniform") spec.kind = GenKind::Uniform;
  else if (kind == "even-regular") spec.kind = GenKind::EvenRegular;
  else if (kind == "odd-pair") spec.kind = GenKind::OddPair;
  else if (kind == "glued") spec.kind = GenKind::Glued;
  else {
    std::cerr << "unknown kind: " << kind << "\n";
    return kExitUsage;
  }
  spec.n = n;
  spec.layers = layers;
  spec.extra_edges = extra;
  spec.seed = seed;
  if (!theorem.empty()) spec.theorem = theorem_from_string(theorem);
  Multigraph g = generate(spec);
  std::cout << "# kind=" << kind << " seed=" << seed << "\n" << serialize(g);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvers and checkers for 3-flows, boundary orientations "
               "and small edge-cuts"};
  app.require_subcommand(1);

  std::string file = "-", mode = "mod3", beta, op, theorem = "1.12";
  std::string strategy = "both", kind = "even-regular";
  int max_size = 5, k = 3, count = 10, n = 8, layers = 2, extra = 0;
  std::uint64_t seed = 1;
  bool as_json = false, as_csv = false;

  auto* census = app.add_subcommand("census", "enumerate small edge-cuts");
  census->add_option("file", file, "graph file, '-' for stdin");
  census->add_option("--max-size", max_size, "largest cut size to list");
  census->add_flag("--json", as_json);

  auto* solve = app.add_subcommand("solve", "orientation/flow solvers");
  solve->add_option("file", file);
  solve->add_option("--mode", mode, "mod3|nz3|beta|z3|flowpoly");
  solve->add_option("--beta", beta, "comma-separated boundary values");
  solve->add_option("--k", k, "flow group order for flowpoly");
  solve->add_flag("--json", as_json);

  auto* gadget = app.add_subcommand("gadget", "augmentation constructions");
  gadget->add_option("file", file);
  gadget->add_option("--op", op, "glue-k7|z0-3flow|z0-z3")->required();
  gadget->add_option("--beta", beta, "boundary for z0-z3");
  gadget->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "generate-and-verify campaigns");
  verify->add_option("--theorem", theorem, "1.12|1.13|1.14|1.17");
  verify->add_option("--count", count, "instances to generate");
  verify->add_option("--seed", seed, "campaign seed");
  verify->add_option("--strategy", strategy, "direct|paper|both");
  verify->add_flag("--json", as_json);
  verify->add_flag("--csv", as_csv);

  auto* gen = app.add_subcommand("generate", "emit one random instance");
  gen->add_option("--kind", kind, "uniform|even-regular|odd-pair|glued");
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--layers", layers, "cycle layers (degree = 2*layers)");
  gen->add_option("--extra-edges", extra, "edge count for uniform/glued");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--theorem", theorem, "keep only hypothesis-passing graphs")
      ->expected(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (census->parsed()) return run_census(file, max_size, as_json);
    if (solve->parsed()) return run_solve(file, mode, beta, k, as_json);
    if (gadget->parsed()) return run_gadget(file, op, beta, as_json);
    if (verify->parsed())
      return run_verify(theorem, count, seed, strategy, as_json, as_csv);
    if (gen->parsed())
      return run_generate(kind, n, layers, extra, seed,
                          gen->count("--theorem") ? theorem : "");
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what()
              << " (raise via ZFLOW_LIMITS)\n";
    return kExitResource;
  } catch (const invalid_argument_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GenerationFailure& e) {
    std::cerr << "generation failure: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
