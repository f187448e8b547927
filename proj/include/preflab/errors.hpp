#pragma once

#include <stdexcept>

namespace preflab {

// Mismatched alternative counts, wrong tuple arity, malformed level vectors.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Rejected text or JSON input; the message names the offending token.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A requested carrier or table would exceed the configured size guard.
struct SizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace preflab
