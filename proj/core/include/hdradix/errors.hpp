#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hdradix/numbers.hpp"

namespace hdradix {

struct NotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDivisorModulus : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadBaseShape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DigitOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoContraction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(std::string msg, size_t at) : std::runtime_error(std::move(msg)), pos(at) {}
};

// Raised when digit extraction revisits a state (or overruns the iteration
// cap without repeating). `cycle` holds the repeating states in lattice
// coordinates, rotated so cycle[0] is the lexicographically largest member;
// empty when the cap was hit without a repeat.
struct NonTerminating : std::runtime_error {
  std::vector<std::pair<Int, Int>> cycle;
  NonTerminating(std::string msg, std::vector<std::pair<Int, Int>> c)
      : std::runtime_error(std::move(msg)), cycle(std::move(c)) {}
};

} // namespace hdradix
