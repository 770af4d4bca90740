#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cimprove/graph.hpp"

namespace cimprove {

// Seeded generators. Only raw std::mt19937_64 output is consumed (the
// standard fixes its sequence; the distribution classes are
// implementation-defined), so a seed yields the same graph everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);
  // True with probability p (53-bit resolution).
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

// G(n, p): every pair (ordered pair when directed) independently.
Graph erdos_renyi(std::size_t n, double p, bool directed, std::uint64_t seed);

struct PlantedParams {
  std::size_t clusters = 3;
  std::size_t min_size = 1;
  std::size_t max_size = 4;
  std::size_t extra = 1;   // upper bound on the deletion-set size
  double attach = 0.5;     // edge probability for extra vertices and z
};

// Disjoint cliques with sizes drawn from [min_size, max_size], then `extra`
// vertices joined to each earlier vertex with probability `attach`, then z
// (the last vertex) joined likewise. G - extras - z is a cluster graph.
struct PlantedGraph {
  Graph g;
  Vertex z = 0;
  std::vector<Vertex> extras;
};

PlantedGraph planted_cluster_graph(const PlantedParams& params,
                                   std::uint64_t seed);

}  // namespace cimprove
