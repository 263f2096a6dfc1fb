#pragma once

#include <stdexcept>

namespace ncpark {

// Malformed user-facing input: bad text, a chain that is not a chain,
// a preference list that is not a parking function.
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A consistency check failed inside an algorithm. Reaching one of these
// means a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ncpark
