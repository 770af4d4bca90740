#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "cimprove/cluster.hpp"
#include "cimprove/instance.hpp"
#include "cimprove/solve_exact.hpp"

namespace cimprove {

// sig(V_i) for a vertex subset V_i of one cluster: the cluster's signature
// and the set of signatures of the chosen vertices.
struct SignatureElement {
  Signature cluster_sig = 0;
  std::vector<Signature> vertex_sigs;  // sorted, nonempty

  std::size_t cost() const { return vertex_sigs.size(); }
  friend auto operator<=>(const SignatureElement&,
                          const SignatureElement&) = default;
};

// sig(V) of a solution: one element per touched cluster signature class.
using SolutionSignature = std::vector<SignatureElement>;

// Undirected closeness improvement, parameterized by the deletion-set size.
// Enumerates V* n V_VDS, then every solution signature within budget; each
// signature element is placed in its most potent eligible clusters (ranked
// by exact closeness gain of touching the cluster, then by size), with the
// number of clusters per element enumerated; leftover budget is padded with
// the smallest remaining candidates. Every completed candidate is evaluated
// exactly and the maximum returned.
SolverReport solve_closeness_fpt(const ImprovementInstance& inst,
                                 const ClusterDecomposition& dec);

// One touched-cluster pattern of a betweenness solution: n_{S,S'} clusters
// with signature S, each contributing n_{S,S',s} vertices of signature s for
// every s in S'.
struct ProfileGroup {
  Signature cluster_sig = 0;
  std::vector<std::pair<Signature, std::size_t>> vertex_counts;  // sorted
  std::size_t clusters = 0;

  std::size_t vertices_per_cluster() const;
};

struct BetweennessProfile {
  std::vector<Vertex> vds_part;
  std::vector<ProfileGroup> groups;

  // |vds_part| + sum over groups of clusters * vertices_per_cluster.
  std::size_t cost() const;
};

// Calls `visit` for every profile with cost <= k whose groups are each
// realizable on their own (joint realizability is left to the caller).
void for_each_betweenness_profile(
    const ImprovementInstance& inst, const ClusterDecomposition& dec,
    const std::function<void(const BetweennessProfile&)>& visit);

// Undirected betweenness improvement, parameterized by k and the
// deletion-set size. For each profile, clusters are chosen up to
// automorphism (clusters with equal signature and equal multiset of vertex
// signatures are interchangeable), vertices are the smallest of each
// signature, and every completed candidate is evaluated exactly.
SolverReport solve_betweenness_fpt(const ImprovementInstance& inst,
                                   const ClusterDecomposition& dec);

}  // namespace cimprove
