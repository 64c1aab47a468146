#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcn {

// Invalid domain object handed to a constructor or operation.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input; `position` is the 1-based offset of the first bad token.
struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// A structural claim the algorithms rely on was violated at runtime.
// This is never expected to fire; if it does, the message carries diagnostics.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace dcn
