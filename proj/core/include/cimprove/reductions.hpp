#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cimprove/graph.hpp"
#include "cimprove/instance.hpp"

namespace cimprove {

struct DominatingSetInstance {
  Graph g;  // undirected
  std::size_t k = 0;
};

// Elements are 0..universe-1. Sets must be nonempty and in range; a set
// is stored sorted and duplicate-free.
struct SetCoverInstance {
  std::size_t universe = 0;
  std::vector<std::vector<std::size_t>> family;
  std::size_t k = 0;
};

// Throws ArgumentError on an empty or out-of-range set, or a directed graph.
void validate(const DominatingSetInstance& ds);
void validate(const SetCoverInstance& sc);

struct ReductionOutput {
  ImprovementInstance inst;
  std::vector<std::string> roles;  // per vertex, e.g. "u_1", "z_2_3", "c_5"
  std::optional<std::uint64_t> alpha;
};

// Every generator clamps the budget to the number of choosable objects
// (vertices for Dominating Set, sets for Set Cover) before computing r; a
// larger budget never changes the source answer.

// Undirected closeness: G plus isolated z; r = k + (n-k)/2.
ReductionOutput ds_to_closeness(const DominatingSetInstance& ds);

// Undirected closeness with pendant paths u_i - x_i - y_i - z; r = 2n + k/2.
ReductionOutput ds_to_closeness_diam4(const DominatingSetInstance& ds);

// Directed closeness on a DAG: arcs (v_j, u_i) for s_i in F_j, isolated z;
// r = k + n/2.
ReductionOutput sc_to_directed_closeness(const SetCoverInstance& sc);

// As above plus w_j with arcs (z,w_j), (w_j,v_j) and back-arcs to z from
// every u_i, v_j, w_j; r = k + m + (n + m - k)/2. Requires every element
// to lie in some set (otherwise the construction is not sound).
ReductionOutput sc_to_directed_closeness_diam4(const SetCoverInstance& sc);

// Undirected betweenness for target z_1 with alpha copies z_2_i; requires
// k >= 1. alpha is the smallest integer above 3k(k-1)/2 and
// r = alpha k + 2/3 alpha (n-k) + (k + alpha + C(alpha,2)) / 2.
ReductionOutput ds_to_betweenness(const DominatingSetInstance& ds);

// Directed betweenness on a DAG: arcs (v_j,u_i) and (c,z) for m(m+n-1)
// vertices c; r = (k+n) m (m+n-1).
ReductionOutput sc_to_directed_betweenness(const SetCoverInstance& sc);

inline constexpr std::size_t kBruteForceLimit = 20;

// A dominating set of size <= k (sorted), if any. SizeGuardError when the
// graph has more than kBruteForceLimit vertices.
std::optional<std::vector<Vertex>> solve_dominating_set_bf(const Graph& g,
                                                            std::size_t k);

// Indices of <= k sets covering the universe, if any. SizeGuardError when
// there are more than kBruteForceLimit sets.
std::optional<std::vector<std::size_t>> solve_set_cover_bf(
    const SetCoverInstance& sc);

// Dominating Set file: an undirected edge-list block then "k <int>".
// Set Cover file: "universe <n>", any number of "set <e>..." lines, then
// "k <int>".
DominatingSetInstance parse_dominating_set(std::istream& in);
SetCoverInstance parse_set_cover(std::istream& in);
void write_dominating_set(std::ostream& out, const DominatingSetInstance& ds);
void write_set_cover(std::ostream& out, const SetCoverInstance& sc);

}  // namespace cimprove
