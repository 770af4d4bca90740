// Acceptance suite: one PASS/FAIL line per criterion. Fixed seeds
// throughout; exits nonzero if any criterion fails.
//
//   acceptance            run all criteria
//   acceptance 2 6        run only criteria 2 and 6

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cimprove/centrality.hpp"
#include "cimprove/cluster.hpp"
#include "cimprove/random_graphs.hpp"
#include "cimprove/reductions.hpp"
#include "cimprove/solve_exact.hpp"
#include "cimprove/solve_fpt.hpp"
#include "cli.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace cimprove {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string seconds(double s) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << s << "s";
  return out.str();
}

bool yes(const ImprovementInstance& inst) {
  return solve_incident(inst, {.stop_at_threshold = true}).best.achieved >=
         inst.threshold();
}

// Random graph on n vertices with edge probability drawn from a few
// densities, seeded from rng.
Graph random_graph(Rng& rng, std::size_t n, bool directed) {
  static constexpr double kDensities[] = {0.2, 0.35, 0.5, 0.7};
  const double p = kDensities[rng.below(4)];
  return erdos_renyi(n, p, directed, rng.below(1ull << 62));
}

SetCoverInstance random_set_cover(Rng& rng, std::size_t max_n,
                                  std::size_t max_m, bool must_cover) {
  while (true) {
    SetCoverInstance sc;
    sc.universe = rng.between(1, max_n);
    const std::size_t m = rng.between(1, max_m);
    std::uint32_t covered = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const auto mask =
          static_cast<std::uint32_t>(rng.between(1, (1u << sc.universe) - 1));
      covered |= mask;
      std::vector<std::size_t> set;
      for (std::size_t e = 0; e < sc.universe; ++e) {
        if (mask & (1u << e)) set.push_back(e);
      }
      sc.family.push_back(std::move(set));
    }
    sc.k = rng.below(3);
    if (!must_cover || covered == (1u << sc.universe) - 1) return sc;
  }
}

// ---------------------------------------------------------------------------

Outcome sample_dominating_set() {
  const auto start = Clock::now();
  const auto out = ds_to_closeness({fixtures::six_vertex_graph(), 2});
  const auto report = solve_incident(out.inst);
  const std::vector<Edge> quoted{{1, 6}, {2, 6}};  // {z,u2},{z,u3}
  const Rational quoted_value = verify(out.inst, quoted).achieved;
  const double elapsed = seconds_since(start);

  std::ostringstream witness;
  for (const Edge& e : report.best.additions) {
    witness << "{" << e.u << "," << e.v << "}";
  }
  Outcome o;
  o.pass = out.inst.threshold() == Rational(4) &&
           report.best.achieved == Rational(4) && quoted_value == Rational(4) &&
           elapsed < 1.0;
  o.detail = "r=" + out.inst.threshold().to_string() +
             " achieved=" + report.best.achieved.to_string() +
             " witness=" + witness.str() +
             " (lexicographic tie-break; {z,u2},{z,u3} achieves " +
             quoted_value.to_string() + " too) in " + seconds(elapsed);
  return o;
}

Outcome incident_suffices(CentralityKind kind, double limit) {
  const auto start = Clock::now();
  Rng rng(kind == CentralityKind::kCloseness ? 2002 : 3003);
  std::size_t instances = 0, mismatches = 0;
  for (std::size_t i = 0; i < 240; ++i) {
    const bool directed = i % 2 == 1;
    const std::size_t n = 4 + (i / 2) % 5;
    const Graph g = random_graph(rng, n, directed);
    const auto z = static_cast<Vertex>(rng.below(n));
    const std::size_t k = 1 + (i / 10) % 2;
    const ImprovementInstance inst(g, z, k, Rational(0), kind);
    ++instances;
    if (solve_incident(inst).best.achieved !=
        solve_unrestricted(inst).best.achieved) {
      ++mismatches;
    }
  }
  const double elapsed = seconds_since(start);
  return {mismatches == 0 && elapsed < limit,
          std::to_string(instances) + " instances (n 4..8, k 1..2, half " +
              "directed), " + std::to_string(mismatches) + " mismatches in " +
              seconds(elapsed)};
}

Outcome fpt_matches(CentralityKind kind, std::size_t want, std::size_t max_n,
                    std::size_t max_k) {
  const auto start = Clock::now();
  Rng rng(kind == CentralityKind::kCloseness ? 4004 : 5005);
  std::size_t instances = 0, mismatches = 0, max_l = 0, largest = 0;
  while (instances < want) {
    PlantedParams params;
    params.clusters = rng.between(2, 4);
    params.min_size = 1;
    params.max_size = 3;
    params.extra = rng.below(3);
    params.attach = 0.3 + 0.1 * static_cast<double>(rng.below(4));
    const auto planted = planted_cluster_graph(params, rng.below(1ull << 62));
    if (planted.g.vertex_count() > max_n) continue;
    const auto dec = cluster_vertex_deletion(planted.g, planted.z);
    if (dec.parameter() > 2) continue;
    const std::size_t k = rng.between(1, max_k);
    const ImprovementInstance inst(planted.g, planted.z, k, Rational(0), kind);
    const SolverReport fpt = kind == CentralityKind::kCloseness
                                 ? solve_closeness_fpt(inst, dec)
                                 : solve_betweenness_fpt(inst, dec);
    if (fpt.best.achieved != solve_incident(inst).best.achieved ||
        verify(inst, fpt.best.additions).achieved != fpt.best.achieved) {
      ++mismatches;
    }
    max_l = std::max(max_l, dec.parameter());
    largest = std::max(largest, planted.g.vertex_count());
    ++instances;
  }
  const double elapsed = seconds_since(start);
  return {mismatches == 0 && elapsed < 600.0,
          std::to_string(instances) + " planted instances (max l=" +
              std::to_string(max_l) + ", max n=" + std::to_string(largest) +
              ", k<=" + std::to_string(max_k) + "), " +
              std::to_string(mismatches) + " mismatches in " +
              seconds(elapsed)};
}

struct RoundTrip {
  std::string name;
  std::size_t samples = 0;
  std::size_t disagreements = 0;
};

Outcome round_trips() {
  const auto start = Clock::now();
  std::vector<RoundTrip> rows;

  const auto ds_protocol =
      [&](const std::string& name, std::uint64_t seed, std::size_t samples,
          std::size_t min_n, std::size_t max_n,
          const std::function<std::size_t(std::size_t)>& budget,
          const std::function<ReductionOutput(const DominatingSetInstance&)>&
              reduce) {
        Rng rng(seed);
        RoundTrip row{name};
        for (std::size_t i = 0; i < samples; ++i) {
          const std::size_t n = rng.between(min_n, max_n);
          const DominatingSetInstance ds{random_graph(rng, n, false),
                                         budget(i)};
          const bool source = solve_dominating_set_bf(ds.g, ds.k).has_value();
          const bool target = yes(reduce(ds).inst);
          ++row.samples;
          if (source != target) ++row.disagreements;
        }
        rows.push_back(row);
      };
  const auto sc_protocol =
      [&](const std::string& name, std::uint64_t seed, std::size_t samples,
          std::size_t max_size, bool must_cover,
          const std::function<ReductionOutput(const SetCoverInstance&)>&
              reduce) {
        Rng rng(seed);
        RoundTrip row{name};
        for (std::size_t i = 0; i < samples; ++i) {
          const auto sc = random_set_cover(rng, max_size, max_size, must_cover);
          const bool source = solve_set_cover_bf(sc).has_value();
          const bool target = yes(reduce(sc).inst);
          ++row.samples;
          if (source != target) ++row.disagreements;
        }
        rows.push_back(row);
      };

  const auto one_or_two = [](std::size_t i) { return 1 + i % 2; };
  ds_protocol("ds->closeness", 6001, 500, 1, 6, one_or_two, ds_to_closeness);
  ds_protocol("ds->closeness-diam4", 6002, 500, 1, 6, one_or_two,
              ds_to_closeness_diam4);
  sc_protocol("sc->directed-closeness", 6003, 300, 4, false,
              sc_to_directed_closeness);
  sc_protocol("sc->directed-closeness-diam4", 6004, 300, 4, true,
              sc_to_directed_closeness_diam4);
  ds_protocol("ds->betweenness", 6005, 300, 2, 5,
              [](std::size_t) { return std::size_t{2}; }, ds_to_betweenness);
  sc_protocol("sc->directed-betweenness", 6006, 300, 3, false,
              sc_to_directed_betweenness);

  Outcome o;
  for (const RoundTrip& r : rows) {
    if (r.disagreements > 0) o.pass = false;
    o.detail += r.name + " " + std::to_string(r.disagreements) + "/" +
                std::to_string(r.samples) + "; ";
  }
  o.detail += "disagreements in " + seconds(seconds_since(start));
  return o;
}

Outcome betweenness_engine() {
  const auto start = Clock::now();
  Rng rng(7007);
  std::size_t graphs = 0, checks = 0, mismatches = 0;
  for (std::size_t i = 0; i < 220; ++i) {
    const std::size_t n = 3 + i % 7;  // 3..9
    const Graph g = random_graph(rng, n, i % 2 == 1);
    ++graphs;
    for (Vertex z = 0; z < n; ++z) {
      ++checks;
      if (betweenness(g, z) != betweenness_naive(g, z)) ++mismatches;
    }
  }
  const double elapsed = seconds_since(start);
  return {mismatches == 0 && elapsed < 60.0,
          std::to_string(graphs) + " graphs, " + std::to_string(checks) +
              " (graph, z) pairs, " + std::to_string(mismatches) +
              " mismatches in " + seconds(elapsed)};
}

Outcome gadget_structure() {
  Rng rng(8008);
  std::size_t betw_bad = 0, betw_total = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const DominatingSetInstance ds{random_graph(rng, rng.between(1, 6), false),
                                   rng.between(1, 3)};
    ++betw_total;
    if (diameter(ds_to_betweenness(ds).inst.graph()) != Distance(3)) {
      ++betw_bad;
    }
  }

  std::size_t diam4_h_bad = 0, diam4_d_bad = 0, diam4_total = 0;
  while (diam4_total < 200) {
    const Graph g = random_graph(rng, rng.between(3, 10), false);
    std::size_t max_degree = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      max_degree = std::max(max_degree, g.degree(v));
    }
    if (max_degree > 4) continue;
    const Graph out = ds_to_closeness_diam4({g, 2}).inst.graph();
    ++diam4_total;
    if (h_index(out) > 4) ++diam4_h_bad;
    if (diameter(out) > Distance(6)) ++diam4_d_bad;
  }

  std::size_t dag_bad = 0, dag_total = 0, strong_bad = 0, strong_total = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const auto sc = random_set_cover(rng, 4, 4, false);
    dag_total += 2;
    if (!oracle::acyclic(sc_to_directed_closeness(sc).inst.graph())) ++dag_bad;
    if (!oracle::acyclic(sc_to_directed_betweenness(sc).inst.graph())) {
      ++dag_bad;
    }
    const auto covering = random_set_cover(rng, 4, 4, true);
    const Graph g = sc_to_directed_closeness_diam4(covering).inst.graph();
    ++strong_total;
    if (!oracle::strongly_connected(g) || diameter(g) > Distance(4)) {
      ++strong_bad;
    }
  }

  Outcome o;
  o.pass = betw_bad + diam4_h_bad + diam4_d_bad + dag_bad + strong_bad == 0;
  o.detail = "betweenness diameter!=3: " + std::to_string(betw_bad) + "/" +
             std::to_string(betw_total) +
             "; closeness-diam4 on max-degree-4 inputs: H-index>4 " +
             std::to_string(diam4_h_bad) + "/" + std::to_string(diam4_total) +
             ", diameter>6 " + std::to_string(diam4_d_bad) + "/" +
             std::to_string(diam4_total) + "; not acyclic " +
             std::to_string(dag_bad) + "/" + std::to_string(dag_total) +
             "; diam4 digraph not strongly connected or diameter>4 " +
             std::to_string(strong_bad) + "/" + std::to_string(strong_total);
  return o;
}

Outcome closeness_monotone() {
  Rng rng(9009);
  std::size_t triples = 0, decreases = 0;
  while (triples < 1000) {
    const bool directed = rng.below(2) == 1;
    const std::size_t n = rng.between(2, 10);
    const Graph g = random_graph(rng, n, directed);
    const auto z = static_cast<Vertex>(rng.below(n));
    std::vector<Vertex> absent;
    for (Vertex v = 0; v < n; ++v) {
      if (v != z && !g.has_edge(z, v)) absent.push_back(v);
    }
    if (absent.empty()) continue;
    const Vertex v = absent[rng.below(absent.size())];
    const std::vector<Edge> add{canonical(g, {z, v})};
    if (closeness(add_edges(g, add), z) < closeness(g, z)) ++decreases;
    ++triples;
  }
  return {decreases == 0, std::to_string(triples) + " triples, " +
                              std::to_string(decreases) + " decreases"};
}

// The CLI suite: every command except bench (whose timings vary), with
// and without --json, fed through in-memory streams.
std::string cli_suite() {
  std::ostringstream log;
  const auto call = [&](std::vector<std::string> args,
                        const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    std::string line;
    for (const auto& a : args) line += a + " ";
    log << "$ " << line << "\n[exit " << code << "]\n"
        << out.str() << err.str();
    return out.str();
  };

  const std::string instance_path =
      (std::filesystem::temp_directory_path() / "cimprove_acceptance.inst")
          .string();
  std::ostringstream ds_text, sc_text;
  write_dominating_set(ds_text, {fixtures::six_vertex_graph_plus(), 2});
  write_set_cover(sc_text, fixtures::five_element_cover());
  for (const std::string from : {"ds", "ds-diam4", "ds-betw"}) {
    call({"reduce", "--from", from, "--input", "-"}, ds_text.str());
    call({"reduce", "--from", from, "--input", "-", "--json"}, ds_text.str());
  }
  for (const std::string from : {"sc", "sc-diam4", "sc-betw"}) {
    call({"reduce", "--from", from, "--input", "-"}, sc_text.str());
  }

  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto s = std::to_string(seed);
    const auto graph = call({"gen", "--n", "8", "--p", "0.3", "--seed", s});
    call({"gen", "--n", "7", "--directed", "--seed", s, "--json"});
    call({"centrality", "--graph", "-", "--z", "0", "--kind", "c"}, graph);
    call({"centrality", "--graph", "-", "--z", "1", "--kind", "b", "--json"},
         graph);
    call({"cvd", "--graph", "-", "--z", "0"}, graph);
    call({"cvd", "--graph", "-", "--json"}, graph);
    for (const std::string kind : {"c", "b"}) {
      const auto inst =
          call({"gen", "--model", "planted", "--clusters", "3", "--extra", "1",
                "--max-size", "3", "--seed", s, "--k", "2", "--kind", kind,
                "--r", "3"});
      for (const std::string solver : {"incident", "fpt", "greedy", "oracle"}) {
        const auto sol = call({"improve", "--instance", "-", "--solver", solver},
                              inst);
        call({"improve", "--instance", "-", "--solver", solver, "--json"},
             inst);
        std::ofstream(instance_path) << inst;
        call({"verify", "--instance", instance_path, "--solution", "-"}, sol);
      }
    }
  }
  call({"improve", "--instance", "-"}, "not an instance\n");
  return log.str();
}

Outcome determinism() {
  const auto start = Clock::now();
  const std::string first = cli_suite();
  const std::string second = cli_suite();
  return {first == second && !first.empty(),
          std::to_string(first.size()) + " bytes per run, " +
              (first == second ? "identical" : "DIFFERENT") + " in " +
              seconds(seconds_since(start))};
}

}  // namespace
}  // namespace cimprove

int main(int argc, char** argv) {
  using namespace cimprove;
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "DS->closeness sample: r = 4 and incident optimum 4",
       sample_dominating_set},
      {2, "closeness: incident = unrestricted optimum",
       [] { return incident_suffices(CentralityKind::kCloseness, 120.0); }},
      {3, "betweenness: incident = unrestricted optimum",
       [] { return incident_suffices(CentralityKind::kBetweenness, 180.0); }},
      {4, "closeness FPT = incident optimum",
       [] { return fpt_matches(CentralityKind::kCloseness, 100, 14, 3); }},
      {5, "betweenness FPT = incident optimum",
       [] { return fpt_matches(CentralityKind::kBetweenness, 50, 10, 2); }},
      {6, "reduction round-trips agree with source oracles", round_trips},
      {7, "betweenness = path-enumeration oracle", betweenness_engine},
      {8, "gadget structure (diameter, H-index, acyclic, strong)",
       gadget_structure},
      {9, "closeness never decreases under an incident addition",
       closeness_monotone},
      {10, "CLI suite output is byte-identical across runs", determinism},
  };

  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": "
              << c.title << " -- " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
