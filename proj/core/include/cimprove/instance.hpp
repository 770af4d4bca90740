#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cimprove/centrality.hpp"
#include "cimprove/graph.hpp"
#include "cimprove/rational.hpp"

namespace cimprove {

struct ProblemKind {
  CentralityKind centrality = CentralityKind::kCloseness;
  bool directed = false;

  friend bool operator==(const ProblemKind&, const ProblemKind&) = default;
};

std::string to_string(const ProblemKind& kind);

// (G, z, k, r) plus the problem variant. The four variants (closeness or
// betweenness, undirected or directed) share this encoding; the variant's
// directedness always matches the graph's.
class ImprovementInstance {
 public:
  // Throws ArgumentError if z is out of range.
  ImprovementInstance(Graph graph, Vertex z, std::size_t k, Rational r,
                      CentralityKind centrality);

  const Graph& graph() const { return graph_; }
  Vertex target() const { return z_; }
  std::size_t budget() const { return k_; }
  const Rational& threshold() const { return r_; }
  ProblemKind kind() const { return {centrality_, graph_.is_directed()}; }
  CentralityKind centrality() const { return centrality_; }

  // Centrality of the target in graph() + additions (unvalidated).
  Rational evaluate(std::span<const Edge> additions) const;

  ImprovementInstance with_threshold(Rational r) const;

 private:
  Graph graph_;
  Vertex z_;
  std::size_t k_;
  Rational r_;
  CentralityKind centrality_;
};

struct Solution {
  std::vector<Edge> additions;  // canonical, sorted
  Rational achieved;
};

struct Verdict {
  bool decision = false;  // achieved >= r
  Rational achieved;
};

// Recomputes the target's centrality in G + additions from scratch. Throws
// InvalidSolutionError if the set exceeds k or contains an existing pair, a
// self-loop or a duplicate. Independent of the order of `additions`.
Verdict verify(const ImprovementInstance& inst,
               std::span<const Edge> additions);

// Canonicalizes (undirected pairs to u < v) and sorts.
std::vector<Edge> normalize_additions(const Graph& g,
                                      std::vector<Edge> additions);

// Instance file: the edge-list block, then
//   z <id>
//   k <int>
//   r <p/q>
//   kind closeness|betweenness
ImprovementInstance parse_instance(std::istream& in);
ImprovementInstance parse_instance_string(const std::string& text);
void write_instance(std::ostream& out, const ImprovementInstance& inst);

// Solution file: "add u v" lines; optional informational keys (solver,
// achieved, threshold, decision, candidates, kind, vds, parameter) are
// accepted; the claimed achieved value is returned separately so
// callers can compare a claimed value against a recomputation.
struct SolutionFile {
  std::vector<Edge> additions;
  std::string claimed_achieved;  // empty when absent
};

SolutionFile parse_solution(std::istream& in);

}  // namespace cimprove
