#pragma once

#include <stdexcept>
#include <string>

namespace gysincalc {

/// Structural misuse of an API: mismatched variable counts, bad indices,
/// values outside an operation's documented domain.
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (polynomial expressions, rationals, certificates).
struct parse_error : std::runtime_error {
  std::size_t position;
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// An internal cross-check failed: exact division left a remainder, a result
/// that must be symmetric is not, or two independent computations of the same
/// quantity disagree.  These indicate a bug, never bad user input.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gysincalc
