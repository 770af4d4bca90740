#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "cimprove/centrality.hpp"
#include "cimprove/cluster.hpp"
#include "cimprove/errors.hpp"
#include "cimprove/instance.hpp"
#include "cimprove/random_graphs.hpp"
#include "cimprove/reductions.hpp"
#include "cimprove/solve_exact.hpp"
#include "cimprove/solve_fpt.hpp"

namespace cimprove::cli {

namespace {

using Json = nlohmann::ordered_json;

// Input and output context of one invocation.
struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const Io& io, const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << io.in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

Json header(const std::string& command) {
  return Json{{"format", 1}, {"command", command}};
}

Json edges_json(const std::vector<Edge>& edges) {
  Json list = Json::array();
  for (const Edge& e : edges) list.push_back({e.u, e.v});
  return list;
}

void print_json(const Io& io, const Json& j) { io.out << j.dump(2) << '\n'; }

std::string solver_list() { return "incident|fpt|greedy|oracle"; }

// --- centrality -----------------------------------------------------------

struct CentralityArgs {
  std::string graph;
  Vertex z = 0;
  std::string kind = "c";
  std::string orientation = "from";
  bool json = false;
};

int centrality_cmd(const CentralityArgs& a, const Io& io) {
  std::istringstream text(read_input(io, a.graph));
  const Graph g = parse_edge_list(text);
  if (!g.valid(a.z)) throw ArgumentError("vertex z out of range");
  const CentralityKind kind = parse_centrality_kind(a.kind);
  Rational value;
  if (kind == CentralityKind::kCloseness) {
    value = closeness(g, a.z,
                      a.orientation == "to" ? Orientation::kToTarget
                                            : Orientation::kFromTarget);
  } else {
    value = betweenness(g, a.z);
  }
  if (a.json) {
    Json j = header("centrality");
    j["kind"] = std::string(to_string(kind));
    j["z"] = a.z;
    if (kind == CentralityKind::kCloseness && g.is_directed()) {
      j["orientation"] = a.orientation;
    }
    j["value"] = value.to_string();
    print_json(io, j);
  } else {
    io.out << value << '\n';
  }
  return kOk;
}

// --- improve --------------------------------------------------------------

struct ImproveArgs {
  std::string instance;
  std::string solver = "incident";
  std::vector<Vertex> vds;
  bool vds_given = false;
  bool stop_at_threshold = false;
  bool json = false;
};

struct SolverRun {
  SolverReport report;
  std::optional<ClusterDecomposition> dec;
};

SolverRun run_solver(const ImprovementInstance& inst, const std::string& name,
                     const std::optional<std::vector<Vertex>>& vds,
                     bool stop_at_threshold) {
  const SolveOptions options{.stop_at_threshold = stop_at_threshold};
  if (name == "incident") return {solve_incident(inst, options), {}};
  if (name == "oracle") return {solve_unrestricted(inst, options), {}};
  if (name == "greedy") return {greedy(inst), {}};
  if (name == "fpt") {
    if (inst.graph().is_directed()) {
      throw ArgumentError("the fpt solver handles undirected instances only");
    }
    ClusterDecomposition dec =
        vds ? decompose(inst.graph(), inst.target(), *vds)
            : cluster_vertex_deletion(inst.graph(), inst.target());
    SolverReport report = inst.centrality() == CentralityKind::kCloseness
                              ? solve_closeness_fpt(inst, dec)
                              : solve_betweenness_fpt(inst, dec);
    return {std::move(report), std::move(dec)};
  }
  throw ArgumentError("unknown solver '" + name + "' (" + solver_list() + ")");
}

int improve_cmd(const ImproveArgs& a, const Io& io) {
  const auto inst = parse_instance_string(read_input(io, a.instance));
  const auto run = run_solver(
      inst, a.solver,
      a.vds_given ? std::optional<std::vector<Vertex>>(a.vds) : std::nullopt,
      a.stop_at_threshold);
  const Solution& best = run.report.best;
  const bool yes = best.achieved >= inst.threshold();
  if (a.json) {
    Json j = header("improve");
    j["solver"] = a.solver;
    j["kind"] = to_string(inst.kind());
    j["additions"] = edges_json(best.additions);
    j["achieved"] = best.achieved.to_string();
    j["threshold"] = inst.threshold().to_string();
    j["decision"] = yes ? "yes" : "no";
    j["candidates"] = run.report.candidates_evaluated;
    if (run.dec) {
      j["parameter"] = run.dec->parameter();
      j["vds"] = run.dec->vds;
    }
    print_json(io, j);
  } else {
    io.out << "solver " << a.solver << '\n';
    if (run.dec) {
      io.out << "parameter " << run.dec->parameter() << '\n' << "vds";
      for (Vertex v : run.dec->vds) io.out << ' ' << v;
      io.out << '\n';
    }
    for (const Edge& e : best.additions) {
      io.out << "add " << e.u << ' ' << e.v << '\n';
    }
    io.out << "achieved " << best.achieved << '\n'
           << "threshold " << inst.threshold() << '\n'
           << "decision " << (yes ? "yes" : "no") << '\n'
           << "candidates " << run.report.candidates_evaluated << '\n';
  }
  return yes ? kOk : kDecisionNo;
}

// --- cvd ------------------------------------------------------------------

struct CvdArgs {
  std::string graph;
  std::optional<Vertex> z;
  bool json = false;
};

int cvd_cmd(const CvdArgs& a, const Io& io) {
  std::istringstream text(read_input(io, a.graph));
  const Graph g = parse_edge_list(text);
  if (a.z && !g.valid(*a.z)) throw ArgumentError("vertex z out of range");
  const auto vds = minimum_cluster_deletion_set(g, a.z);
  std::optional<ClusterDecomposition> dec;
  if (a.z) dec = decompose(g, *a.z, vds);
  if (a.json) {
    Json j = header("cvd");
    j["parameter"] = vds.size();
    j["vds"] = vds;
    if (dec) {
      j["z"] = *a.z;
      Json clusters = Json::array();
      for (std::size_t c = 0; c < dec->clusters.size(); ++c) {
        Json members = Json::array();
        for (Vertex v : dec->clusters[c]) {
          members.push_back({{"vertex", v}, {"signature", dec->vertex_sig[v]}});
        }
        clusters.push_back(
            {{"signature", dec->cluster_sig[c]}, {"members", members}});
      }
      j["clusters"] = clusters;
    }
    print_json(io, j);
  } else {
    io.out << "parameter " << vds.size() << '\n' << "vds";
    for (Vertex v : vds) io.out << ' ' << v;
    io.out << '\n';
    if (dec) {
      // Signatures are bitmasks: bit i is vds[i], the top bit is z.
      for (std::size_t c = 0; c < dec->clusters.size(); ++c) {
        io.out << "cluster " << dec->cluster_sig[c] << ':';
        for (Vertex v : dec->clusters[c]) {
          io.out << ' ' << v << '/' << dec->vertex_sig[v];
        }
        io.out << '\n';
      }
    }
  }
  return kOk;
}

// --- reduce ---------------------------------------------------------------

struct ReduceArgs {
  std::string from;
  std::string input;
  std::string roles_path;
  bool json = false;
};

Json roles_json(const ReductionOutput& r) {
  Json roles = Json::object();
  for (std::size_t v = 0; v < r.roles.size(); ++v) {
    roles[std::to_string(v)] = r.roles[v];
  }
  return roles;
}

int reduce_cmd(const ReduceArgs& a, const Io& io) {
  std::istringstream text(read_input(io, a.input));
  const bool from_ds = a.from.rfind("ds", 0) == 0;
  std::optional<ReductionOutput> r;
  if (from_ds) {
    const auto ds = parse_dominating_set(text);
    if (a.from == "ds") r = ds_to_closeness(ds);
    if (a.from == "ds-diam4") r = ds_to_closeness_diam4(ds);
    if (a.from == "ds-betw") r = ds_to_betweenness(ds);
  } else {
    const auto sc = parse_set_cover(text);
    if (a.from == "sc") r = sc_to_directed_closeness(sc);
    if (a.from == "sc-diam4") r = sc_to_directed_closeness_diam4(sc);
    if (a.from == "sc-betw") r = sc_to_directed_betweenness(sc);
  }
  if (!r) throw ArgumentError("unknown reduction '" + a.from + "'");

  std::ostringstream instance;
  write_instance(instance, r->inst);
  Json role_doc = header("reduce");
  role_doc["from"] = a.from;
  role_doc["roles"] = roles_json(*r);
  role_doc["alpha"] = r->alpha ? Json(*r->alpha) : Json(nullptr);
  if (!a.roles_path.empty()) {
    std::ofstream file(a.roles_path);
    if (!file) throw ParseError("cannot write '" + a.roles_path + "'");
    file << role_doc.dump(2) << '\n';
  }
  if (a.json) {
    role_doc["threshold"] = r->inst.threshold().to_string();
    role_doc["budget"] = r->inst.budget();
    role_doc["instance"] = instance.str();
    print_json(io, role_doc);
  } else {
    io.out << instance.str();
  }
  return kOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string instance;
  std::string solution;
  bool json = false;
};

int verify_cmd(const VerifyArgs& a, const Io& io) {
  if (a.instance == "-" && a.solution == "-") {
    throw ArgumentError("only one of --instance and --solution may be '-'");
  }
  const auto inst = parse_instance_string(read_input(io, a.instance));
  std::istringstream text(read_input(io, a.solution));
  const SolutionFile file = parse_solution(text);
  const Verdict verdict = verify(inst, file.additions);
  const bool claim_ok = file.claimed_achieved.empty() ||
                        file.claimed_achieved == verdict.achieved.to_string();
  if (a.json) {
    Json j = header("verify");
    j["valid"] = claim_ok;
    j["achieved"] = verdict.achieved.to_string();
    j["claimed"] = file.claimed_achieved.empty()
                       ? Json(nullptr)
                       : Json(file.claimed_achieved);
    j["threshold"] = inst.threshold().to_string();
    j["decision"] = verdict.decision ? "yes" : "no";
    print_json(io, j);
  } else {
    io.out << "valid " << (claim_ok ? "yes" : "no") << '\n'
           << "achieved " << verdict.achieved << '\n'
           << "threshold " << inst.threshold() << '\n'
           << "decision " << (verdict.decision ? "yes" : "no") << '\n';
  }
  if (!claim_ok) {
    io.err << "error: claimed achieved " << file.claimed_achieved
           << " but recomputed " << verdict.achieved << '\n';
    return kError;
  }
  return kOk;
}

// --- gen ------------------------------------------------------------------

struct GenArgs {
  std::string model = "er";
  std::size_t n = 8;
  double p = 0.3;
  bool directed = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  PlantedParams planted;
  std::optional<std::size_t> k;
  std::string kind = "c";
  std::optional<Vertex> z;
  std::string r = "0";
  bool json = false;
};

int gen_cmd(const GenArgs& a, const Io& io) {
  if (!a.seed_given) throw ArgumentError("gen requires an explicit --seed");
  Graph g;
  Vertex z = a.z.value_or(0);
  if (a.model == "er") {
    g = erdos_renyi(a.n, a.p, a.directed, a.seed);
  } else if (a.model == "planted") {
    if (a.directed) throw ArgumentError("planted graphs are undirected");
    auto planted = planted_cluster_graph(a.planted, a.seed);
    g = std::move(planted.g);
    if (!a.z) z = planted.z;
  } else {
    throw ArgumentError("unknown model '" + a.model + "' (er|planted)");
  }

  std::ostringstream text;
  if (a.k) {
    const ImprovementInstance inst(g, z, *a.k, Rational::parse(a.r),
                                   parse_centrality_kind(a.kind));
    write_instance(text, inst);
  } else {
    write_edge_list(text, g);
  }
  if (a.json) {
    Json j = header("gen");
    j["model"] = a.model;
    j["seed"] = a.seed;
    j["vertices"] = g.vertex_count();
    j["edges"] = edges_json(g.edges());
    j["text"] = text.str();
    print_json(io, j);
  } else {
    io.out << text.str();
  }
  return kOk;
}

// --- bench ----------------------------------------------------------------

struct BenchArgs {
  std::string instance;
  std::vector<std::string> solvers{"incident", "greedy"};
  std::size_t repeat = 3;
  bool json = false;
};

int bench_cmd(const BenchArgs& a, const Io& io) {
  const auto inst = parse_instance_string(read_input(io, a.instance));
  Json rows = Json::array();
  if (!a.json) {
    io.out << std::left << std::setw(10) << "solver" << std::setw(14)
           << "achieved" << std::setw(12) << "candidates" << "best_ms\n";
  }
  for (const std::string& name : a.solvers) {
    double best_ms = 0;
    SolverReport report;
    for (std::size_t i = 0; i < std::max<std::size_t>(a.repeat, 1); ++i) {
      report = run_solver(inst, name, std::nullopt, false).report;
      const double ms =
          std::chrono::duration<double, std::milli>(report.elapsed).count();
      if (i == 0 || ms < best_ms) best_ms = ms;
    }
    if (a.json) {
      rows.push_back({{"solver", name},
                      {"achieved", report.best.achieved.to_string()},
                      {"candidates", report.candidates_evaluated},
                      {"best_ms", best_ms}});
    } else {
      io.out << std::left << std::setw(10) << name << std::setw(14)
             << report.best.achieved.to_string() << std::setw(12)
             << report.candidates_evaluated << std::fixed
             << std::setprecision(3) << best_ms << '\n';
    }
  }
  if (a.json) {
    Json j = header("bench");
    j["repeat"] = a.repeat;
    j["rows"] = rows;
    print_json(io, j);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  const Io io{in, out, err};
  CLI::App app{"Closeness and betweenness improvement solvers", "cimprove"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cimprove 0.1.0");

  CentralityArgs ca;
  auto* c = app.add_subcommand("centrality", "Exact centrality of one vertex");
  c->add_option("--graph", ca.graph, "Edge-list file or -")->required();
  c->add_option("--z", ca.z, "Vertex id")->required();
  c->add_option("--kind", ca.kind, "c|b|closeness|betweenness");
  c->add_option("--orientation", ca.orientation,
                "Directed closeness: from z (default) or to z")
      ->check(CLI::IsMember({"from", "to"}));
  c->add_flag("--json", ca.json);

  ImproveArgs ia;
  auto* i = app.add_subcommand("improve", "Solve an improvement instance");
  i->add_option("--instance", ia.instance, "Instance file or -")->required();
  i->add_option("--solver", ia.solver, solver_list())
      ->check(CLI::IsMember({"incident", "fpt", "greedy", "oracle"}));
  auto* vds_opt = i->add_option("--vds", ia.vds,
                                "Deletion set for fpt (default: computed)")
                      ->delimiter(',');
  i->add_flag("--stop-at-threshold", ia.stop_at_threshold,
              "Stop the exact search once r is reached");
  i->add_flag("--json", ia.json);

  CvdArgs va;
  auto* v = app.add_subcommand("cvd", "Minimum cluster vertex deletion set");
  v->add_option("--graph", va.graph, "Edge-list file or -")->required();
  v->add_option("--z", va.z, "Target vertex to exclude and decompose around");
  v->add_flag("--json", va.json);

  ReduceArgs ra;
  auto* r = app.add_subcommand("reduce", "Generate a hardness-reduction instance");
  r->add_option("--from", ra.from, "Source problem and construction")
      ->required()
      ->check(CLI::IsMember(
          {"ds", "sc", "ds-diam4", "sc-diam4", "ds-betw", "sc-betw"}));
  r->add_option("--input", ra.input, "Dominating Set or Set Cover file or -")
      ->required();
  r->add_option("--roles", ra.roles_path, "Write the role map JSON here");
  r->add_flag("--json", ra.json);

  VerifyArgs fa;
  auto* f = app.add_subcommand("verify", "Re-check a solution");
  f->add_option("--instance", fa.instance, "Instance file or -")->required();
  f->add_option("--solution", fa.solution, "Solution file or -")->required();
  f->add_flag("--json", fa.json);

  GenArgs ga;
  auto* g = app.add_subcommand("gen", "Seeded random graphs or instances");
  g->add_option("--model", ga.model, "er|planted");
  g->add_option("--n", ga.n, "Vertices (er)");
  g->add_option("--p", ga.p, "Edge probability (er)");
  g->add_flag("--directed", ga.directed);
  auto* seed_opt = g->add_option("--seed", ga.seed, "Random seed")->required();
  g->add_option("--clusters", ga.planted.clusters, "Number of cliques (planted)");
  g->add_option("--extra", ga.planted.extra, "Extra vertices (planted)");
  g->add_option("--min-size", ga.planted.min_size, "Smallest clique (planted)");
  g->add_option("--max-size", ga.planted.max_size, "Largest clique (planted)");
  g->add_option("--attach", ga.planted.attach,
                "Attachment probability of extras and z (planted)");
  g->add_option("--k", ga.k, "Emit an instance with this budget");
  g->add_option("--kind", ga.kind, "Instance kind: c|b");
  g->add_option("--z", ga.z, "Instance target (default 0, planted: its z)");
  g->add_option("--r", ga.r, "Instance threshold p/q");
  g->add_flag("--json", ga.json);

  BenchArgs ba;
  auto* b = app.add_subcommand("bench", "Time solvers on one instance");
  b->add_option("--instance", ba.instance, "Instance file or -")->required();
  b->add_option("--solvers", ba.solvers, solver_list())->delimiter(',');
  b->add_option("--repeat", ba.repeat, "Runs per solver; best time is shown");
  b->add_flag("--json", ba.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (c->parsed()) return centrality_cmd(ca, io);
    if (i->parsed()) {
      ia.vds_given = vds_opt->count() > 0;
      return improve_cmd(ia, io);
    }
    if (v->parsed()) return cvd_cmd(va, io);
    if (r->parsed()) return reduce_cmd(ra, io);
    if (f->parsed()) return verify_cmd(fa, io);
    if (g->parsed()) {
      ga.seed_given = seed_opt->count() > 0;
      return gen_cmd(ga, io);
    }
    if (b->parsed()) return bench_cmd(ba, io);
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace cimprove::cli
