#pragma once

#include <string_view>

#include "cimprove/graph.hpp"
#include "cimprove/rational.hpp"

namespace cimprove {

enum class CentralityKind { kCloseness, kBetweenness };

std::string_view to_string(CentralityKind kind);
// Accepts "closeness"/"c" and "betweenness"/"b"; throws ParseError.
CentralityKind parse_centrality_kind(std::string_view text);

// Which way distances are measured for directed closeness.
enum class Orientation { kFromTarget, kToTarget };

// Harmonic closeness: sum of 1/d(z,u) over u != z with finite distance.
// For directed graphs the default measures distances from z; kToTarget
// measures d(u,z) instead.
Rational closeness(const Graph& g, Vertex z,
                   Orientation orientation = Orientation::kFromTarget);

// Sum of sigma_stz / sigma_st over pairs s,t != z with sigma_st != 0.
// Undirected graphs count unordered pairs; directed graphs ordered pairs.
// sigma_stz = sigma_sz * sigma_zt when d(s,z) + d(z,t) = d(s,t), else 0.
Rational betweenness(const Graph& g, Vertex z);

// Same contract as betweenness(), computed by explicit enumeration of
// simple paths with iterative deepening per pair. Exponential; intended as
// an independent test oracle for small graphs (n <= 12).
Rational betweenness_naive(const Graph& g, Vertex z);

Rational centrality(const Graph& g, Vertex z, CentralityKind kind);

}  // namespace cimprove
