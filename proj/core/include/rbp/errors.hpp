#pragma once

#include <stdexcept>
#include <string>

namespace rbp {

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

// Malformed input file or literal; message carries line/field context.
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(m) {}
};

// A solver was asked for more than its configured cap allows.
struct TooLargeError : Error {
  TooLargeError(const std::string& what, int size, int cap)
      : Error(what + ": size " + std::to_string(size) + " exceeds cap " +
              std::to_string(cap)) {}
};

// Bad argument to a solver or generator (empty node set, odd set, bad k, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error(m) {}
};

}  // namespace rbp
