#pragma once
#include <stdexcept>
#include <string>

namespace syzygy {

// Bad user-supplied data (malformed numbers, degenerate invariants, ...).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A mathematical consistency check failed; indicates a bug or an incomplete class set.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct CacheCorruption : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace syzygy
