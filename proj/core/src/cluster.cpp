#include "cimprove/cluster.hpp"

#include <algorithm>
#include <string>

#include "cimprove/errors.hpp"

namespace cimprove {

namespace {

void require_undirected(const Graph& g) {
  if (g.is_directed()) {
    throw ArgumentError("cluster vertex deletion requires an undirected graph");
  }
}

bool branch(const Graph& g, std::vector<bool>& removed, std::size_t budget,
            std::vector<Vertex>& chosen) {
  const auto p3 = find_induced_p3(g, removed);
  if (!p3) return true;
  if (budget == 0) return false;
  for (Vertex v : {p3->a, p3->b, p3->c}) {
    // The excluded vertex is pre-marked removed, so it never appears in p3.
    removed[v] = true;
    chosen.push_back(v);
    if (branch(g, removed, budget - 1, chosen)) return true;
    chosen.pop_back();
    removed[v] = false;
  }
  return false;
}

}  // namespace

std::vector<Vertex> minimum_cluster_deletion_set(
    const Graph& g, std::optional<Vertex> excluded) {
  require_undirected(g);
  if (excluded && !g.valid(*excluded)) {
    throw ArgumentError("excluded vertex out of range");
  }
  std::vector<bool> removed(g.vertex_count(), false);
  if (excluded) removed[*excluded] = true;
  std::vector<Vertex> chosen;
  for (std::size_t budget = 0;; ++budget) {
    if (branch(g, removed, budget, chosen)) break;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

ClusterDecomposition decompose(const Graph& g, Vertex z,
                               std::vector<Vertex> vds) {
  require_undirected(g);
  if (!g.valid(z)) throw ArgumentError("target vertex out of range");
  std::sort(vds.begin(), vds.end());
  if (std::adjacent_find(vds.begin(), vds.end()) != vds.end()) {
    throw ArgumentError("deletion set contains a vertex twice");
  }
  if (vds.size() > kMaxDeletionSetSize) {
    throw ArgumentError("deletion set larger than " +
                        std::to_string(kMaxDeletionSetSize));
  }
  for (Vertex v : vds) {
    if (!g.valid(v)) throw ArgumentError("deletion vertex out of range");
    if (v == z) throw ArgumentError("deletion set must not contain z");
  }

  const std::size_t n = g.vertex_count();
  std::vector<bool> removed(n, false);
  removed[z] = true;
  for (Vertex v : vds) removed[v] = true;
  if (const auto p3 = find_induced_p3(g, removed)) {
    throw ArgumentError("G - vds - z is not a cluster graph (induced path " +
                        std::to_string(p3->a) + "-" + std::to_string(p3->b) +
                        "-" + std::to_string(p3->c) + ")");
  }

  ClusterDecomposition dec;
  dec.z = z;
  dec.vds = std::move(vds);
  dec.vertex_sig.assign(n, 0);
  dec.cluster_of.assign(n, -1);

  std::vector<int> vds_index(n, -1);
  for (std::size_t i = 0; i < dec.vds.size(); ++i) {
    vds_index[dec.vds[i]] = static_cast<int>(i);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (removed[v] || dec.cluster_of[v] >= 0) continue;
    // In a cluster graph a component is v's closed neighborhood.
    std::vector<Vertex> members{v};
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) members.push_back(w);
    }
    std::sort(members.begin(), members.end());
    const int id = static_cast<int>(dec.clusters.size());
    Signature csig = 0;
    for (Vertex u : members) {
      dec.cluster_of[u] = id;
      Signature sig = 0;
      for (Vertex w : g.neighbors(u)) {
        if (w == z) {
          sig |= dec.z_bit();
        } else if (vds_index[w] >= 0) {
          sig |= Signature{1} << vds_index[w];
        }
      }
      dec.vertex_sig[u] = sig;
      csig |= sig;
    }
    dec.clusters.push_back(std::move(members));
    dec.cluster_sig.push_back(csig);
  }
  return dec;
}

void validate_decomposition(const Graph& g, const ClusterDecomposition& dec) {
  const ClusterDecomposition fresh = decompose(g, dec.z, dec.vds);
  if (fresh.vds != dec.vds || fresh.clusters != dec.clusters ||
      fresh.cluster_sig != dec.cluster_sig ||
      fresh.vertex_sig != dec.vertex_sig ||
      fresh.cluster_of != dec.cluster_of) {
    throw ArgumentError("cluster decomposition is inconsistent with the graph");
  }
}

ClusterDecomposition cluster_vertex_deletion(const Graph& g, Vertex z) {
  return decompose(g, z, minimum_cluster_deletion_set(g, z));
}

}  // namespace cimprove
