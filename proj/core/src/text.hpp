#pragma once

// Line/token helpers shared by the text parsers. Not installed.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "cimprove/errors.hpp"
#include "cimprove/graph.hpp"

namespace cimprove::text {

struct Line {
  std::size_t number = 0;  // 1-based, for diagnostics
  std::vector<std::string> tokens;
};

// Reads all non-blank lines, dropping everything after '#'.
std::vector<Line> read_lines(std::istream& in);

[[noreturn]] void fail(const Line& line, const std::string& message);

std::uint64_t to_uint(const Line& line, const std::string& token);

// Parses the "directed|undirected <n>" header at lines[pos] and the edge
// lines that follow. Stops at the first line whose first token is not an
// integer and leaves pos there.
Graph parse_graph_block(const std::vector<Line>& lines, std::size_t& pos);

}  // namespace cimprove::text
