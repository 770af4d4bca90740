#include "cimprove/centrality.hpp"

#include <string>
#include <vector>

#include "cimprove/errors.hpp"

namespace cimprove {

namespace {

void check_vertex(const Graph& g, Vertex z) {
  if (!g.valid(z)) {
    throw ArgumentError("vertex " + std::to_string(z) + " out of range");
  }
}

}  // namespace

std::string_view to_string(CentralityKind kind) {
  return kind == CentralityKind::kCloseness ? "closeness" : "betweenness";
}

CentralityKind parse_centrality_kind(std::string_view text) {
  if (text == "closeness" || text == "c") return CentralityKind::kCloseness;
  if (text == "betweenness" || text == "b") {
    return CentralityKind::kBetweenness;
  }
  throw ParseError("unknown centrality kind '" + std::string(text) + "'");
}

Rational closeness(const Graph& g, Vertex z, Orientation orientation) {
  check_vertex(g, z);
  const auto dist = orientation == Orientation::kToTarget && g.is_directed()
                        ? bfs_distances(g.reversed(), z)
                        : bfs_distances(g, z);
  // Bucket by distance so the sum needs one division per layer.
  std::vector<std::int64_t> per_layer(g.vertex_count() + 1, 0);
  for (Vertex u = 0; u < dist.size(); ++u) {
    if (u != z && dist[u].finite()) ++per_layer[dist[u].hops()];
  }
  Rational sum;
  for (std::size_t d = 1; d < per_layer.size(); ++d) {
    if (per_layer[d] != 0) {
      sum += Rational(per_layer[d], static_cast<std::int64_t>(d));
    }
  }
  return sum;
}

Rational betweenness(const Graph& g, Vertex z) {
  check_vertex(g, z);
  const PathCounts from_z = shortest_path_counts(g, z);
  const PathCounts to_z =
      g.is_directed() ? shortest_path_counts(g.reversed(), z) : from_z;

  mpq_class sum = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (s == z || !to_z.distances[s].finite()) continue;
    const std::uint32_t d_sz = to_z.distances[s].hops();
    const PathCounts from_s = shortest_path_counts(g, s);
    // Undirected pairs are unordered: only t > s.
    for (Vertex t = g.is_directed() ? 0 : s + 1; t < g.vertex_count(); ++t) {
      if (t == s || t == z || !from_z.distances[t].finite()) continue;
      const Distance d_st = from_s.distances[t];
      if (!d_st.finite()) continue;
      if (d_sz + from_z.distances[t].hops() != d_st.hops()) continue;
      mpq_class term(to_z.counts[s] * from_z.counts[t], from_s.counts[t]);
      term.canonicalize();
      sum += term;
    }
  }
  return Rational(std::move(sum));
}

namespace {

// Counts simple s->t paths of exactly `remaining` more edges, and how many
// of those visit z.
class PathEnumerator {
 public:
  PathEnumerator(const Graph& g, Vertex z)
      : g_(g), z_(z), on_path_(g.vertex_count(), false) {}

  void count(Vertex s, Vertex t, std::uint32_t length, BigInt& total,
             BigInt& through) {
    total = 0;
    through = 0;
    target_ = t;
    on_path_[s] = true;
    walk(s, length, false, total, through);
    on_path_[s] = false;
  }

 private:
  void walk(Vertex u, std::uint32_t remaining, bool seen_z, BigInt& total,
            BigInt& through) {
    if (remaining == 0) {
      if (u == target_) {
        total += 1;
        if (seen_z) through += 1;
      }
      return;
    }
    if (u == target_) return;
    for (Vertex w : g_.out_neighbors(u)) {
      if (on_path_[w]) continue;
      on_path_[w] = true;
      walk(w, remaining - 1, seen_z || w == z_, total, through);
      on_path_[w] = false;
    }
  }

  const Graph& g_;
  Vertex z_;
  Vertex target_ = 0;
  std::vector<bool> on_path_;
};

}  // namespace

Rational betweenness_naive(const Graph& g, Vertex z) {
  check_vertex(g, z);
  PathEnumerator paths(g, z);
  Rational sum;
  BigInt total;
  BigInt through;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (s == t || s == z || t == z) continue;
      if (!g.is_directed() && t < s) continue;
      // The first length with any simple path is the distance.
      for (std::uint32_t len = 1; len < n; ++len) {
        paths.count(s, t, len, total, through);
        if (total != 0) {
          if (through != 0) sum += Rational(through, total);
          break;
        }
      }
    }
  }
  return sum;
}

Rational centrality(const Graph& g, Vertex z, CentralityKind kind) {
  return kind == CentralityKind::kCloseness ? closeness(g, z)
                                            : betweenness(g, z);
}

}  // namespace cimprove
