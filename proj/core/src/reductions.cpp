#include "cimprove/reductions.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>

#include "cimprove/errors.hpp"
#include "text.hpp"

namespace cimprove {

namespace {

std::string role(const char* prefix, std::size_t index) {
  return std::string(prefix) + "_" + std::to_string(index + 1);
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Rational frac(std::size_t num, std::size_t den) {
  return Rational(as_int(num), as_int(den));
}

std::vector<Edge> original_edges(const Graph& g) { return g.edges(); }

// Calls f on every subset of {0..n-1} with size <= k, as a sorted index
// list, in increasing size then lexicographic order; stops when f is true.
bool first_subset(std::size_t n, std::size_t k,
                  const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx;
  for (std::size_t size = 0; size <= std::min(n, k); ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (f(idx)) return true;
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return false;
}

}  // namespace

void validate(const DominatingSetInstance& ds) {
  if (ds.g.is_directed()) {
    throw ArgumentError("dominating set instances are undirected");
  }
}

void validate(const SetCoverInstance& sc) {
  for (std::size_t j = 0; j < sc.family.size(); ++j) {
    const auto& set = sc.family[j];
    if (set.empty()) throw ArgumentError(role("set", j) + " is empty");
    for (std::size_t e : set) {
      if (e >= sc.universe) {
        throw ArgumentError(role("set", j) + " has element " +
                            std::to_string(e) + " outside the universe");
      }
    }
    if (!std::is_sorted(set.begin(), set.end()) ||
        std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw ArgumentError(role("set", j) + " is not sorted and duplicate-free");
    }
  }
}

ReductionOutput ds_to_closeness(const DominatingSetInstance& ds) {
  validate(ds);
  const std::size_t n = ds.g.vertex_count();
  const std::size_t k = std::min(ds.k, n);
  std::vector<std::string> roles;
  for (std::size_t i = 0; i < n; ++i) roles.push_back(role("u", i));
  roles.push_back("z");
  Graph g = Graph::undirected(n + 1, original_edges(ds.g));
  Rational r = Rational(as_int(k)) + frac(n - k, 2);
  return {ImprovementInstance(std::move(g), static_cast<Vertex>(n), k,
                              std::move(r), CentralityKind::kCloseness),
          std::move(roles), std::nullopt};
}

ReductionOutput ds_to_closeness_diam4(const DominatingSetInstance& ds) {
  validate(ds);
  const std::size_t n = ds.g.vertex_count();
  const std::size_t k = std::min(ds.k, n);
  const auto x = [n](std::size_t i) { return static_cast<Vertex>(n + i); };
  const auto y = [n](std::size_t i) { return static_cast<Vertex>(2 * n + i); };
  const auto z = static_cast<Vertex>(3 * n);

  std::vector<std::string> roles;
  for (std::size_t i = 0; i < n; ++i) roles.push_back(role("u", i));
  for (std::size_t i = 0; i < n; ++i) roles.push_back(role("x", i));
  for (std::size_t i = 0; i < n; ++i) roles.push_back(role("y", i));
  roles.push_back("z");

  auto edges = original_edges(ds.g);
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), x(i)});
    edges.push_back({x(i), y(i)});
    edges.push_back({y(i), z});
  }
  Graph g = Graph::undirected(3 * n + 1, edges);
  Rational r = Rational(as_int(2 * n)) + frac(k, 2);
  return {ImprovementInstance(std::move(g), z, k, std::move(r),
                              CentralityKind::kCloseness),
          std::move(roles), std::nullopt};
}

namespace {

// u_i = i, v_j = n + j, z = n + m.
std::vector<Edge> set_cover_arcs(const SetCoverInstance& sc) {
  const std::size_t n = sc.universe;
  std::vector<Edge> arcs;
  for (std::size_t j = 0; j < sc.family.size(); ++j) {
    for (std::size_t e : sc.family[j]) {
      arcs.push_back({static_cast<Vertex>(n + j), static_cast<Vertex>(e)});
    }
  }
  return arcs;
}

std::vector<std::string> set_cover_roles(const SetCoverInstance& sc) {
  std::vector<std::string> roles;
  for (std::size_t i = 0; i < sc.universe; ++i) roles.push_back(role("u", i));
  for (std::size_t j = 0; j < sc.family.size(); ++j) {
    roles.push_back(role("v", j));
  }
  roles.push_back("z");
  return roles;
}

}  // namespace

ReductionOutput sc_to_directed_closeness(const SetCoverInstance& sc) {
  validate(sc);
  const std::size_t n = sc.universe;
  const std::size_t m = sc.family.size();
  const std::size_t k = std::min(sc.k, m);
  Graph g = Graph::directed(n + m + 1, set_cover_arcs(sc));
  Rational r = Rational(as_int(k)) + frac(n, 2);
  return {ImprovementInstance(std::move(g), static_cast<Vertex>(n + m), k,
                              std::move(r), CentralityKind::kCloseness),
          set_cover_roles(sc), std::nullopt};
}

ReductionOutput sc_to_directed_closeness_diam4(const SetCoverInstance& sc) {
  validate(sc);
  const std::size_t n = sc.universe;
  const std::size_t m = sc.family.size();
  std::vector<bool> covered(n, false);
  for (const auto& set : sc.family) {
    for (std::size_t e : set) covered[e] = true;
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw ArgumentError(
        "every element must lie in some set for the diameter-4 construction");
  }
  const std::size_t k = std::min(sc.k, m);
  const auto z = static_cast<Vertex>(n + m);
  const auto w = [&](std::size_t j) { return static_cast<Vertex>(n + m + 1 + j); };

  auto roles = set_cover_roles(sc);
  for (std::size_t j = 0; j < m; ++j) roles.push_back(role("w", j));

  auto arcs = set_cover_arcs(sc);
  for (std::size_t j = 0; j < m; ++j) {
    const auto v = static_cast<Vertex>(n + j);
    arcs.push_back({z, w(j)});
    arcs.push_back({w(j), v});
    arcs.push_back({v, z});
    arcs.push_back({w(j), z});
  }
  for (std::size_t i = 0; i < n; ++i) {
    arcs.push_back({static_cast<Vertex>(i), z});
  }
  Graph g = Graph::directed(n + 2 * m + 1, arcs);
  Rational r = Rational(as_int(k + m)) + frac(n + m - k, 2);
  return {ImprovementInstance(std::move(g), z, k, std::move(r),
                              CentralityKind::kCloseness),
          std::move(roles), std::nullopt};
}

ReductionOutput ds_to_betweenness(const DominatingSetInstance& ds) {
  validate(ds);
  if (ds.k == 0) throw ArgumentError("betweenness reduction needs k >= 1");
  const std::size_t n = ds.g.vertex_count();
  const std::size_t k = std::min(ds.k, n);
  const std::size_t alpha = 3 * k * (k - 1) / 2 + 1;

  const auto z1 = static_cast<Vertex>(n);
  const auto z2 = [n](std::size_t i) { return static_cast<Vertex>(n + 1 + i); };
  const auto z3 = static_cast<Vertex>(n + alpha + 1);
  const auto z4 = static_cast<Vertex>(n + alpha + 2);

  std::vector<std::string> roles;
  for (std::size_t i = 0; i < n; ++i) roles.push_back(role("u", i));
  roles.push_back("z_1");
  for (std::size_t i = 0; i < alpha; ++i) roles.push_back(role("z_2", i));
  roles.push_back("z_3");
  roles.push_back("z_4");

  auto edges = original_edges(ds.g);
  for (std::size_t i = 0; i < alpha; ++i) {
    edges.push_back({z1, z2(i)});
    edges.push_back({z2(i), z3});
  }
  edges.push_back({z1, z3});
  edges.push_back({z1, z4});
  edges.push_back({z3, z4});
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({z4, static_cast<Vertex>(i)});
  }
  Graph g = Graph::undirected(n + alpha + 3, edges);

  Rational r = Rational(as_int(alpha * k)) + frac(2 * alpha * (n - k), 3) +
               frac(k + alpha + alpha * (alpha - 1) / 2, 2);
  return {ImprovementInstance(std::move(g), z1, k, std::move(r),
                              CentralityKind::kBetweenness),
          std::move(roles), alpha};
}

ReductionOutput sc_to_directed_betweenness(const SetCoverInstance& sc) {
  validate(sc);
  const std::size_t n = sc.universe;
  const std::size_t m = sc.family.size();
  const std::size_t k = std::min(sc.k, m);
  const std::size_t c_count = m == 0 ? 0 : m * (m + n - 1);
  const auto z = static_cast<Vertex>(n + m);

  auto roles = set_cover_roles(sc);
  for (std::size_t c = 0; c < c_count; ++c) roles.push_back(role("c", c));

  auto arcs = set_cover_arcs(sc);
  for (std::size_t c = 0; c < c_count; ++c) {
    arcs.push_back({static_cast<Vertex>(n + m + 1 + c), z});
  }
  Graph g = Graph::directed(n + m + 1 + c_count, arcs);
  Rational r(as_int((k + n) * c_count));
  return {ImprovementInstance(std::move(g), z, k, std::move(r),
                              CentralityKind::kBetweenness),
          std::move(roles), std::nullopt};
}

std::optional<std::vector<Vertex>> solve_dominating_set_bf(const Graph& g,
                                                            std::size_t k) {
  if (g.is_directed()) throw ArgumentError("dominating set needs an undirected graph");
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceLimit) {
    throw SizeGuardError("dominating set oracle limited to " +
                         std::to_string(kBruteForceLimit) + " vertices");
  }
  std::vector<std::uint32_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint32_t{1} << v;
    for (Vertex w : g.neighbors(v)) closed[v] |= std::uint32_t{1} << w;
  }
  const std::uint32_t all =
      n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  std::optional<std::vector<Vertex>> found;
  first_subset(n, k, [&](const std::vector<std::size_t>& idx) {
    std::uint32_t dominated = 0;
    for (std::size_t v : idx) dominated |= closed[v];
    if (dominated != all) return false;
    found.emplace(idx.begin(), idx.end());
    return true;
  });
  return found;
}

std::optional<std::vector<std::size_t>> solve_set_cover_bf(
    const SetCoverInstance& sc) {
  validate(sc);
  const std::size_t m = sc.family.size();
  if (m > kBruteForceLimit) {
    throw SizeGuardError("set cover oracle limited to " +
                         std::to_string(kBruteForceLimit) + " sets");
  }
  std::optional<std::vector<std::size_t>> found;
  std::vector<bool> covered;
  first_subset(m, sc.k, [&](const std::vector<std::size_t>& idx) {
    covered.assign(sc.universe, false);
    for (std::size_t j : idx) {
      for (std::size_t e : sc.family[j]) covered[e] = true;
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
      return false;
    }
    found = idx;
    return true;
  });
  return found;
}

namespace {

std::size_t parse_budget_line(const std::vector<text::Line>& lines,
                              std::size_t& pos) {
  if (pos >= lines.size()) throw ParseError("missing 'k <int>' line");
  const auto& line = lines[pos];
  if (line.tokens.size() != 2 || line.tokens[0] != "k") {
    text::fail(line, "expected 'k <int>'");
  }
  ++pos;
  return text::to_uint(line, line.tokens[1]);
}

void expect_end(const std::vector<text::Line>& lines, std::size_t pos) {
  if (pos < lines.size()) text::fail(lines[pos], "unexpected trailing line");
}

}  // namespace

DominatingSetInstance parse_dominating_set(std::istream& in) {
  const auto lines = text::read_lines(in);
  std::size_t pos = 0;
  Graph g = text::parse_graph_block(lines, pos);
  if (g.is_directed()) {
    throw ParseError("dominating set instances must be undirected");
  }
  const std::size_t k = parse_budget_line(lines, pos);
  expect_end(lines, pos);
  return {std::move(g), k};
}

SetCoverInstance parse_set_cover(std::istream& in) {
  const auto lines = text::read_lines(in);
  std::size_t pos = 0;
  if (lines.empty()) throw ParseError("missing 'universe <n>' line");
  const auto& head = lines[0];
  if (head.tokens.size() != 2 || head.tokens[0] != "universe") {
    text::fail(head, "expected 'universe <n>'");
  }
  SetCoverInstance sc;
  sc.universe = text::to_uint(head, head.tokens[1]);
  ++pos;
  for (; pos < lines.size() && lines[pos].tokens[0] == "set"; ++pos) {
    const auto& line = lines[pos];
    std::vector<std::size_t> set;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      const auto e = text::to_uint(line, line.tokens[t]);
      if (e >= sc.universe) text::fail(line, "element outside the universe");
      set.push_back(e);
    }
    std::sort(set.begin(), set.end());
    if (set.empty()) text::fail(line, "empty set");
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      text::fail(line, "element listed twice");
    }
    sc.family.push_back(std::move(set));
  }
  sc.k = parse_budget_line(lines, pos);
  expect_end(lines, pos);
  return sc;
}

void write_dominating_set(std::ostream& out, const DominatingSetInstance& ds) {
  write_edge_list(out, ds.g);
  out << "k " << ds.k << '\n';
}

void write_set_cover(std::ostream& out, const SetCoverInstance& sc) {
  out << "universe " << sc.universe << '\n';
  for (const auto& set : sc.family) {
    out << "set";
    for (std::size_t e : set) out << ' ' << e;
    out << '\n';
  }
  out << "k " << sc.k << '\n';
}

}  // namespace cimprove
