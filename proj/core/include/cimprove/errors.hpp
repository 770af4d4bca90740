#pragma once

#include <stdexcept>
#include <string>

namespace cimprove {

// Precondition violated by the caller: vertex out of range, directed graph
// passed where an undirected one is required, inconsistent decomposition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input (edge lists, instance files, solution files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An addition set that is not a legal solution: existing edge, self-loop,
// duplicate pair, or more than k pairs.
class InvalidSolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search refused because the instance exceeds a size guard.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cimprove
