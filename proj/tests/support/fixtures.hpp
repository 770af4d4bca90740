#pragma once

// Small named inputs shared across tests.

#include <vector>

#include "cimprove/graph.hpp"
#include "cimprove/reductions.hpp"

namespace cimprove::fixtures {

// Six-vertex Dominating Set sample: u1..u6 are vertices 0..5, edges
// u1u3, u2u4, u2u5, u2u6, u3u4.
inline Graph six_vertex_graph() {
  const std::vector<Edge> e{{0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}};
  return Graph::undirected(6, e);
}

// The same sample plus u1u2.
inline Graph six_vertex_graph_plus() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}};
  return Graph::undirected(6, e);
}

// Five elements, four sets: F1={s1,s2}, F2={s2,s3,s4}, F3={s3,s5}, F4={s1,s5}, k=2.
inline SetCoverInstance five_element_cover() {
  return {5, {{0, 1}, {1, 2, 3}, {2, 4}, {0, 4}}, 2};
}

// Three elements, two sets: F1={s1}, F2={s2,s3}, k=2.
inline SetCoverInstance three_element_cover() { return {3, {{0}, {1, 2}}, 2}; }

inline Graph path(std::size_t n, bool directed = false) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph::make(directed, n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  e.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph::undirected(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  }
  return Graph::undirected(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph::undirected(leaves + 1, e);
}

// Two disjoint triangles {0,1,2}, {3,4,5} and an isolated z = 6.
inline Graph two_triangles_and_z() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  return Graph::undirected(7, e);
}

}  // namespace cimprove::fixtures
