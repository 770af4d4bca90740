#include "cimprove/solve_exact.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cimprove/errors.hpp"

namespace cimprove {

namespace {

using Clock = std::chrono::steady_clock;

// Enumerates subsets of `candidates` of size 0..k in increasing size, then
// lexicographic index order; keeps the first maximum.
SolverReport search_subsets(const ImprovementInstance& inst,
                            const std::vector<Edge>& candidates,
                            const SolveOptions& options) {
  const auto start = Clock::now();
  SolverReport report;
  report.best.achieved = inst.evaluate({});
  report.candidates_evaluated = 1;
  bool done = options.stop_at_threshold &&
              report.best.achieved >= inst.threshold();

  const std::size_t max_size = std::min(inst.budget(), candidates.size());
  std::vector<std::size_t> idx;
  std::vector<Edge> chosen;
  for (std::size_t size = 1; size <= max_size && !done; ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      chosen.clear();
      for (std::size_t i : idx) chosen.push_back(candidates[i]);
      Rational value = inst.evaluate(chosen);
      ++report.candidates_evaluated;
      if (value > report.best.achieved) {
        report.best.achieved = std::move(value);
        report.best.additions = chosen;
        if (options.stop_at_threshold &&
            report.best.achieved >= inst.threshold()) {
          done = true;
          break;
        }
      }
      // Next combination in lexicographic order.
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == candidates.size() - size + pos - 1) {
        --pos;
      }
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  report.best.additions =
      normalize_additions(inst.graph(), std::move(report.best.additions));
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace

std::uint64_t subsets_up_to(std::uint64_t c, std::uint64_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  std::uint64_t term = 1;  // C(c, i)
  for (std::uint64_t i = 1; i <= std::min(c, k); ++i) {
    // term * (c - i + 1) / i stays exact because C(c,i-1)*(c-i+1) is
    // divisible by i.
    const std::uint64_t factor = c - i + 1;
    if (term > kMax / factor) return kMax;
    term = term * factor / i;
    if (total > kMax - term) return kMax;
    total += term;
  }
  return total;
}

std::vector<Edge> incident_candidates(const ImprovementInstance& inst) {
  const Graph& g = inst.graph();
  const Vertex z = inst.target();
  std::vector<Edge> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == z) continue;
    if (!g.has_edge(z, v)) out.push_back(canonical(g, {z, v}));
    if (g.is_directed() && inst.centrality() == CentralityKind::kBetweenness &&
        !g.has_edge(v, z)) {
      out.push_back({v, z});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> all_candidates(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = g.is_directed() ? 0 : u + 1; v < g.vertex_count(); ++v) {
      if (u != v && !g.has_edge(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

SolverReport solve_incident(const ImprovementInstance& inst,
                            const SolveOptions& options) {
  return search_subsets(inst, incident_candidates(inst), options);
}

SolverReport solve_unrestricted(const ImprovementInstance& inst,
                                const SolveOptions& options) {
  const auto candidates = all_candidates(inst.graph());
  const auto subsets = subsets_up_to(candidates.size(), inst.budget());
  if (subsets > kUnrestrictedSubsetLimit) {
    throw SizeGuardError("unrestricted search would enumerate " +
                         (subsets == std::numeric_limits<std::uint64_t>::max()
                              ? std::string("too many")
                              : std::to_string(subsets)) +
                         " subsets (limit " +
                         std::to_string(kUnrestrictedSubsetLimit) + ")");
  }
  return search_subsets(inst, candidates, options);
}

SolverReport greedy(const ImprovementInstance& inst) {
  const auto start = Clock::now();
  SolverReport report;
  report.best.achieved = inst.evaluate({});
  report.candidates_evaluated = 1;

  std::vector<Edge> remaining = incident_candidates(inst);
  std::vector<Edge> chosen;
  for (std::size_t round = 0; round < inst.budget(); ++round) {
    std::size_t best_index = remaining.size();
    Rational best_value = report.best.achieved;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      chosen.push_back(remaining[i]);
      Rational value = inst.evaluate(chosen);
      chosen.pop_back();
      ++report.candidates_evaluated;
      if (value > best_value) {
        best_value = std::move(value);
        best_index = i;
      }
    }
    if (best_index == remaining.size()) break;
    chosen.push_back(remaining[best_index]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_index));
    report.best.achieved = std::move(best_value);
  }
  report.best.additions = normalize_additions(inst.graph(), std::move(chosen));
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace cimprove
