#include "cimprove/random_graphs.hpp"

#include <limits>

#include "cimprove/errors.hpp"

namespace cimprove {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("empty range");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t Rng::between(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw ArgumentError("empty range");
  return lo + below(hi - lo + 1);
}

bool Rng::chance(double p) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ArgumentError("probability must lie in [0, 1]");
  }
}

}  // namespace

Graph erdos_renyi(std::size_t n, double p, bool directed, std::uint64_t seed) {
  check_probability(p);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
      if (u != v && rng.chance(p)) edges.push_back({u, v});
    }
  }
  return Graph::make(directed, n, edges);
}

PlantedGraph planted_cluster_graph(const PlantedParams& params,
                                   std::uint64_t seed) {
  check_probability(params.attach);
  if (params.min_size == 0 || params.min_size > params.max_size) {
    throw ArgumentError("cluster sizes need 1 <= min <= max");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  Vertex next = 0;
  for (std::size_t c = 0; c < params.clusters; ++c) {
    const auto size =
        static_cast<Vertex>(rng.between(params.min_size, params.max_size));
    for (Vertex a = next; a < next + size; ++a) {
      for (Vertex b = a + 1; b < next + size; ++b) edges.push_back({a, b});
    }
    next += size;
  }
  PlantedGraph out;
  // Extras first, then z, each attached to everything before it.
  for (std::size_t i = 0; i <= params.extra; ++i) {
    const Vertex v = next++;
    for (Vertex u = 0; u < v; ++u) {
      if (rng.chance(params.attach)) edges.push_back({u, v});
    }
    if (i < params.extra) out.extras.push_back(v);
  }
  out.z = next - 1;
  out.g = Graph::undirected(next, edges);
  return out;
}

}  // namespace cimprove
