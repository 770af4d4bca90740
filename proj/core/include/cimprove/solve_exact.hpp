#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "cimprove/instance.hpp"

namespace cimprove {

struct SolverReport {
  Solution best;
  std::uint64_t candidates_evaluated = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveOptions {
  // Decision mode: stop as soon as some addition set reaches r.
  bool stop_at_threshold = false;
};

// Absent pairs incident to the target that the incident-only solvers
// consider, in lexicographic order:
//   undirected           {z,v}
//   directed closeness   (z,v)
//   directed betweenness (z,v) and (v,z)
std::vector<Edge> incident_candidates(const ImprovementInstance& inst);

// Every absent pair of the graph, in lexicographic order.
std::vector<Edge> all_candidates(const Graph& g);

// Exhaustive search over subsets of incident_candidates() of size <= k, in
// order of increasing size and then lexicographically. Returns a
// maximum-value set; ties go to the first set in that order.
SolverReport solve_incident(const ImprovementInstance& inst,
                            const SolveOptions& options = {});

// Subsets enumerated by the unrestricted oracle; above this the oracle
// throws SizeGuardError.
inline constexpr std::uint64_t kUnrestrictedSubsetLimit = 2'000'000;

// Same search over all_candidates(). Validation oracle for small instances.
SolverReport solve_unrestricted(const ImprovementInstance& inst,
                                const SolveOptions& options = {});

// k rounds; each adds the incident candidate with the largest positive
// marginal gain (ties to the earliest candidate). Stops early when no
// candidate improves.
SolverReport greedy(const ImprovementInstance& inst);

// Number of subsets of size <= k of a c-element set, saturating at
// UINT64_MAX.
std::uint64_t subsets_up_to(std::uint64_t c, std::uint64_t k);

}  // namespace cimprove
