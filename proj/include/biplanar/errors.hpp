#pragma once

#include <stdexcept>
#include <string>

namespace biplanar {

// Input could not be parsed (syntax or invariant violation). CLI exit code 1.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input is well-formed but outside the preconditions of the requested
// construction (e.g. too many edges, not biconnected). CLI exit code 2.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// An internal invariant of the construction was breached; indicates a bug or
// an input the theory does not cover. CLI exit code 3.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace biplanar
