#include "cimprove/graph.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <string>

#include "cimprove/errors.hpp"

namespace cimprove {

namespace {

std::string pair_text(Edge e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

std::ostream& operator<<(std::ostream& os, Distance d) {
  if (!d.finite()) return os << "inf";
  return os << d.hops();
}

Graph Graph::make(bool directed, std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.directed_ = directed;
  g.out_.assign(n, {});
  if (directed) g.in_.assign(n, {});
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ArgumentError("edge " + pair_text(e) + " out of range for n=" +
                          std::to_string(n));
    }
    if (e.u == e.v) throw ArgumentError("self-loop at " + std::to_string(e.u));
    g.out_[e.u].push_back(e.v);
    if (directed) {
      g.in_[e.v].push_back(e.u);
    } else {
      g.out_[e.v].push_back(e.u);
    }
  }
  auto finish = [](std::vector<std::vector<Vertex>>& lists) {
    for (std::size_t v = 0; v < lists.size(); ++v) {
      auto& list = lists[v];
      std::sort(list.begin(), list.end());
      const auto dup = std::adjacent_find(list.begin(), list.end());
      if (dup != list.end()) {
        throw ArgumentError("duplicate edge " +
                            pair_text({static_cast<Vertex>(v), *dup}));
      }
    }
  };
  finish(g.out_);
  finish(g.in_);
  g.m_ = edges.size();
  return g;
}

Graph Graph::undirected(std::size_t n, std::span<const Edge> edges) {
  return make(false, n, edges);
}

Graph Graph::directed(std::size_t n, std::span<const Edge> arcs) {
  return make(true, n, arcs);
}

std::size_t Graph::degree(Vertex v) const {
  return directed_ ? out_[v].size() + in_[v].size() : out_[v].size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!valid(u) || !valid(v)) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(m_);
  for (Vertex u = 0; u < out_.size(); ++u) {
    for (Vertex v : out_[u]) {
      if (directed_ || u < v) result.push_back({u, v});
    }
  }
  return result;
}

Graph Graph::reversed() const {
  if (!directed_) return *this;
  Graph g = *this;
  std::swap(g.out_, g.in_);
  return g;
}

Edge canonical(const Graph& g, Edge e) {
  if (!g.is_directed() && e.u > e.v) std::swap(e.u, e.v);
  return e;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  if (!g.valid(source)) {
    throw ArgumentError("source " + std::to_string(source) + " out of range");
  }
  std::vector<Distance> dist(g.vertex_count());
  std::deque<Vertex> queue{source};
  dist[source] = Distance(0);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    const Distance next(dist[u].hops() + 1);
    for (Vertex w : g.out_neighbors(u)) {
      if (!dist[w].finite()) {
        dist[w] = next;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

PathCounts shortest_path_counts(const Graph& g, Vertex source) {
  if (!g.valid(source)) {
    throw ArgumentError("source " + std::to_string(source) + " out of range");
  }
  PathCounts pc;
  pc.distances.assign(g.vertex_count(), Distance::unreachable());
  pc.counts.assign(g.vertex_count(), BigInt(0));
  std::vector<Vertex> order{source};
  order.reserve(g.vertex_count());
  pc.distances[source] = Distance(0);
  pc.counts[source] = 1;
  // Vertices are appended in BFS order, so every predecessor of a vertex
  // has its final count before the vertex is expanded.
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    const Distance next(pc.distances[u].hops() + 1);
    for (Vertex w : g.out_neighbors(u)) {
      if (!pc.distances[w].finite()) {
        pc.distances[w] = next;
        order.push_back(w);
      }
      if (pc.distances[w] == next) pc.counts[w] += pc.counts[u];
    }
  }
  return pc;
}

Distance diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (Distance d : bfs_distances(g, s)) {
      if (!d.finite()) return Distance::unreachable();
      best = std::max(best, d.hops());
    }
  }
  return Distance(best);
}

std::size_t h_index(const Graph& g) {
  std::vector<std::size_t> degrees(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  std::size_t h = 0;
  while (h < degrees.size() && degrees[h] >= h + 1) ++h;
  return h;
}

Graph add_edges(const Graph& g, std::span<const Edge> additions) {
  std::vector<Edge> all = g.edges();
  std::vector<Edge> seen;
  seen.reserve(additions.size());
  for (Edge e : additions) {
    if (!g.valid(e.u) || !g.valid(e.v)) {
      throw InvalidSolutionError("pair " + pair_text(e) + " out of range");
    }
    if (e.u == e.v) {
      throw InvalidSolutionError("self-loop " + pair_text(e));
    }
    if (g.has_edge(e.u, e.v)) {
      throw InvalidSolutionError("pair " + pair_text(e) +
                                 " is already present");
    }
    const Edge c = canonical(g, e);
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) {
      throw InvalidSolutionError("pair " + pair_text(e) + " listed twice");
    }
    seen.push_back(c);
    all.push_back(c);
  }
  return Graph::make(g.is_directed(), g.vertex_count(), all);
}

std::optional<InducedP3> find_induced_p3(const Graph& g,
                                         const std::vector<bool>& removed) {
  auto alive = [&](Vertex v) { return v >= removed.size() || !removed[v]; };
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    if (!alive(a)) continue;
    for (Vertex b : g.neighbors(a)) {
      if (!alive(b)) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c == a || !alive(c)) continue;
        if (!g.has_edge(a, c)) return InducedP3{a, b, c};
      }
    }
  }
  return std::nullopt;
}

ClusterTest is_cluster_graph(const Graph& g) {
  if (g.is_directed()) {
    throw ArgumentError("cluster-graph test requires an undirected graph");
  }
  ClusterTest result;
  result.witness = find_induced_p3(g, {});
  result.is_cluster = !result.witness.has_value();
  return result;
}

}  // namespace cimprove
