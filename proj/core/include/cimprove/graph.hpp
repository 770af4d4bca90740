#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cimprove/rational.hpp"

namespace cimprove {

// Dense vertex index in [0, n). Names and labels live in the CLI layer only.
using Vertex = std::uint32_t;

// An edge or arc. Undirected edges are stored normalized with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Hop distance, or Unreachable. Unreachable compares greater than every
// finite value.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t hops) : hops_(hops) {}
  static constexpr Distance unreachable() { return Distance(); }

  constexpr bool finite() const { return hops_ != kUnreachable; }
  // Only valid when finite().
  constexpr std::uint32_t hops() const { return hops_; }

  friend constexpr auto operator<=>(const Distance&,
                                    const Distance&) = default;

 private:
  static constexpr std::uint32_t kUnreachable =
      std::numeric_limits<std::uint32_t>::max();
  std::uint32_t hops_ = kUnreachable;
};

std::ostream& operator<<(std::ostream& os, Distance d);

// Immutable unweighted simple graph (directed or undirected) with sorted,
// duplicate-free adjacency lists. Directed graphs keep separate out- and
// in-neighbor lists; for undirected graphs both views coincide.
class Graph {
 public:
  Graph() = default;

  // Throws ArgumentError on out-of-range endpoints, self-loops or duplicate
  // pairs ({u,v} and {v,u} are duplicates in the undirected case).
  static Graph undirected(std::size_t n, std::span<const Edge> edges);
  static Graph directed(std::size_t n, std::span<const Edge> arcs);
  static Graph make(bool directed, std::size_t n, std::span<const Edge> edges);

  bool is_directed() const { return directed_; }
  std::size_t vertex_count() const { return out_.size(); }
  std::size_t edge_count() const { return m_; }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const {
    return directed_ ? std::span<const Vertex>(in_[v])
                     : std::span<const Vertex>(out_[v]);
  }
  std::span<const Vertex> neighbors(Vertex v) const { return out_[v]; }

  // Undirected: degree. Directed: in-degree + out-degree.
  std::size_t degree(Vertex v) const;

  bool has_edge(Vertex u, Vertex v) const;
  bool valid(Vertex v) const { return v < out_.size(); }

  // All edges (u < v) or arcs, in lexicographic order.
  std::vector<Edge> edges() const;

  // Same vertex set with every arc reversed (identity for undirected).
  Graph reversed() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.directed_ == b.directed_ && a.out_ == b.out_;
  }

 private:
  bool directed_ = false;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

// Normalizes an undirected pair to u < v; identity for directed graphs.
Edge canonical(const Graph& g, Edge e);

// BFS hop distances from source (following arc direction).
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

struct PathCounts {
  std::vector<Distance> distances;
  // Number of distinct shortest source->v paths; 0 iff unreachable.
  std::vector<BigInt> counts;
};

PathCounts shortest_path_counts(const Graph& g, Vertex source);

// Unreachable iff disconnected (directed: not strongly connected).
Distance diameter(const Graph& g);

// Largest h with at least h vertices of degree >= h (total degree for
// directed graphs).
std::size_t h_index(const Graph& g);

// G + S. Every pair must be absent, loop-free and mutually distinct;
// violations throw InvalidSolutionError naming the offending pair.
Graph add_edges(const Graph& g, std::span<const Edge> additions);

// Induced path a-b-c: ab, bc in E and ac not in E.
struct InducedP3 {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  friend auto operator<=>(const InducedP3&, const InducedP3&) = default;
};

struct ClusterTest {
  bool is_cluster = true;
  std::optional<InducedP3> witness;  // set iff !is_cluster
};

// Undirected only (ArgumentError otherwise). The witness is the
// lexicographically smallest induced P3 (a, b, c).
ClusterTest is_cluster_graph(const Graph& g);

// Lexicographically smallest induced P3 among vertices not marked in
// `removed`; std::nullopt if the remaining graph is a cluster graph.
std::optional<InducedP3> find_induced_p3(const Graph& g,
                                         const std::vector<bool>& removed);

// Edge-list text format:
//   directed|undirected <n>
//   u v
//   ...
// 0-indexed, '#' starts a comment. Throws ParseError.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_string(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace cimprove
