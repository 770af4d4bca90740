#include "cimprove/instance.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "cimprove/errors.hpp"
#include "text.hpp"

namespace cimprove {

std::string to_string(const ProblemKind& kind) {
  return std::string(kind.directed ? "directed " : "") +
         std::string(to_string(kind.centrality));
}

ImprovementInstance::ImprovementInstance(Graph graph, Vertex z, std::size_t k,
                                         Rational r, CentralityKind centrality)
    : graph_(std::move(graph)),
      z_(z),
      k_(k),
      r_(std::move(r)),
      centrality_(centrality) {
  if (!graph_.valid(z_)) {
    throw ArgumentError("target vertex " + std::to_string(z_) +
                        " out of range");
  }
}

Rational ImprovementInstance::evaluate(std::span<const Edge> additions) const {
  if (additions.empty()) return cimprove::centrality(graph_, z_, centrality_);
  return cimprove::centrality(add_edges(graph_, additions), z_, centrality_);
}

ImprovementInstance ImprovementInstance::with_threshold(Rational r) const {
  ImprovementInstance copy = *this;
  copy.r_ = std::move(r);
  return copy;
}

std::vector<Edge> normalize_additions(const Graph& g,
                                      std::vector<Edge> additions) {
  for (Edge& e : additions) e = canonical(g, e);
  std::sort(additions.begin(), additions.end());
  return additions;
}

Verdict verify(const ImprovementInstance& inst,
               std::span<const Edge> additions) {
  if (additions.size() > inst.budget()) {
    throw InvalidSolutionError(
        std::to_string(additions.size()) + " additions exceed budget k=" +
        std::to_string(inst.budget()));
  }
  // add_edges rejects existing pairs, self-loops and duplicates.
  const Graph augmented = add_edges(inst.graph(), additions);
  Verdict verdict;
  verdict.achieved =
      centrality(augmented, inst.target(), inst.centrality());
  verdict.decision = verdict.achieved >= inst.threshold();
  return verdict;
}

ImprovementInstance parse_instance(std::istream& in) {
  const auto lines = text::read_lines(in);
  std::size_t pos = 0;
  Graph g = text::parse_graph_block(lines, pos);

  std::optional<std::uint64_t> z;
  std::optional<std::uint64_t> k;
  std::optional<Rational> r;
  std::optional<CentralityKind> kind;
  std::set<std::string> seen;
  for (; pos < lines.size(); ++pos) {
    const text::Line& line = lines[pos];
    const std::string& key = line.tokens[0];
    if (line.tokens.size() != 2) text::fail(line, "expected '<key> <value>'");
    if (!seen.insert(key).second) text::fail(line, "repeated key '" + key + "'");
    const std::string& value = line.tokens[1];
    if (key == "z") {
      z = text::to_uint(line, value);
    } else if (key == "k") {
      k = text::to_uint(line, value);
    } else if (key == "r") {
      r = Rational::parse(value);
    } else if (key == "kind") {
      if (value != "closeness" && value != "betweenness") {
        text::fail(line, "kind must be closeness or betweenness");
      }
      kind = parse_centrality_kind(value);
    } else {
      text::fail(line, "unknown key '" + key + "'");
    }
  }
  if (!z || !k || !r || !kind) {
    throw ParseError("instance file needs z, k, r and kind lines");
  }
  if (*z >= g.vertex_count()) throw ParseError("z out of range");
  return ImprovementInstance(std::move(g), static_cast<Vertex>(*z),
                             static_cast<std::size_t>(*k), *r, *kind);
}

ImprovementInstance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const ImprovementInstance& inst) {
  write_edge_list(out, inst.graph());
  out << "z " << inst.target() << '\n'
      << "k " << inst.budget() << '\n'
      << "r " << inst.threshold() << '\n'
      << "kind " << to_string(inst.centrality()) << '\n';
}

SolutionFile parse_solution(std::istream& in) {
  static const std::set<std::string> kInformational = {
      "solver",     "threshold", "decision", "candidates",
      "kind",       "vds",       "parameter"};
  SolutionFile file;
  for (const text::Line& line : text::read_lines(in)) {
    const std::string& key = line.tokens[0];
    if (key == "add") {
      if (line.tokens.size() != 3) text::fail(line, "expected 'add u v'");
      file.additions.push_back(
          {static_cast<Vertex>(text::to_uint(line, line.tokens[1])),
           static_cast<Vertex>(text::to_uint(line, line.tokens[2]))});
    } else if (key == "achieved") {
      if (line.tokens.size() != 2) text::fail(line, "expected 'achieved p/q'");
      file.claimed_achieved = Rational::parse(line.tokens[1]).to_string();
    } else if (!kInformational.count(key)) {
      text::fail(line, "unknown key '" + key + "'");
    }
  }
  return file;
}

}  // namespace cimprove
