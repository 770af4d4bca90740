#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

#include "cimprove/graph.hpp"
#include "text.hpp"

namespace cimprove {

namespace text {

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream tokens(raw);
    Line line{number, {}};
    for (std::string t; tokens >> t;) line.tokens.push_back(t);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

void fail(const Line& line, const std::string& message) {
  throw ParseError("line " + std::to_string(line.number) + ": " + message);
}

namespace {

bool is_uint(const std::string& token) {
  return !token.empty() &&
         std::all_of(token.begin(), token.end(), [](unsigned char c) {
           return std::isdigit(c) != 0;
         });
}

}  // namespace

std::uint64_t to_uint(const Line& line, const std::string& token) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (!is_uint(token) || ec != std::errc() || ptr != end) {
    fail(line, "expected a nonnegative integer, got '" + token + "'");
  }
  return value;
}

Graph parse_graph_block(const std::vector<Line>& lines, std::size_t& pos) {
  if (pos >= lines.size()) throw ParseError("missing graph header");
  const Line& header = lines[pos];
  if (header.tokens.size() != 2 ||
      (header.tokens[0] != "directed" && header.tokens[0] != "undirected")) {
    fail(header, "expected 'directed <n>' or 'undirected <n>'");
  }
  const bool directed = header.tokens[0] == "directed";
  const std::uint64_t n = to_uint(header, header.tokens[1]);
  ++pos;

  std::vector<Edge> edges;
  for (; pos < lines.size() && is_uint(lines[pos].tokens[0]); ++pos) {
    const Line& line = lines[pos];
    if (line.tokens.size() != 2) fail(line, "expected 'u v'");
    const auto u = to_uint(line, line.tokens[0]);
    const auto v = to_uint(line, line.tokens[1]);
    if (u >= n || v >= n) fail(line, "vertex out of range");
    if (u == v) fail(line, "self-loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  try {
    return Graph::make(directed, n, edges);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace text

Graph parse_edge_list(std::istream& in) {
  const auto lines = text::read_lines(in);
  std::size_t pos = 0;
  Graph g = text::parse_graph_block(lines, pos);
  if (pos != lines.size()) text::fail(lines[pos], "unexpected content");
  return g;
}

Graph parse_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << (g.is_directed() ? "directed " : "undirected ") << g.vertex_count()
      << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace cimprove
