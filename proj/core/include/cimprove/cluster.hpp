#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cimprove/graph.hpp"

namespace cimprove {

// Neighborhood restricted to V_VDS + {z}, as a bitmask: bit i stands for
// vds[i], bit vds.size() stands for z.
using Signature = std::uint32_t;

// Largest deletion set the bitmask signatures can address.
inline constexpr std::size_t kMaxDeletionSetSize = 31;

// A cluster vertex deletion set for G - z together with the clusters of
// G - V_VDS - z and their signatures.
struct ClusterDecomposition {
  Vertex z = 0;
  std::vector<Vertex> vds;                   // sorted
  std::vector<std::vector<Vertex>> clusters;  // each sorted; ordered by min
  std::vector<Signature> cluster_sig;        // per cluster
  std::vector<Signature> vertex_sig;         // per vertex; 0 outside clusters
  std::vector<int> cluster_of;               // per vertex; -1 outside

  std::size_t parameter() const { return vds.size(); }
  Signature z_bit() const { return Signature{1} << vds.size(); }
};

// Builds the decomposition for a given deletion set. Throws ArgumentError if
// g is directed, vds contains z or is out of range / too large, or
// G - vds - z is not a cluster graph.
ClusterDecomposition decompose(const Graph& g, Vertex z,
                               std::vector<Vertex> vds);

// Checks that `dec` describes g exactly (same sets and signatures as
// decompose() would produce); throws ArgumentError otherwise.
void validate_decomposition(const Graph& g, const ClusterDecomposition& dec);

// Minimum-size set X of vertices (never `excluded`) such that
// G - X - excluded is a cluster graph. Three-way branching on the
// lexicographically smallest induced P3 with iterative deepening on |X|.
std::vector<Vertex> minimum_cluster_deletion_set(
    const Graph& g, std::optional<Vertex> excluded = std::nullopt);

// minimum_cluster_deletion_set(g, z) followed by decompose(). Undirected
// graphs only.
ClusterDecomposition cluster_vertex_deletion(const Graph& g, Vertex z);

}  // namespace cimprove
