#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hist {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad vertex id, wrong order, disconnected input...).
class InputError : public Error {
public:
  using Error::Error;
};

/// Malformed graph6 data. `offset` is the zero-based byte offset inside the offending line,
/// `line` the one-based line number when the record came from a stream (0 otherwise).
class FormatError : public Error {
public:
  FormatError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : Error(describe(what, offset, line)), offset_(offset), line_(line) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

private:
  static std::string describe(const std::string& what, std::size_t offset, std::size_t line) {
    std::string s = "graph6: " + what + " at byte " + std::to_string(offset);
    if (line != 0)
      s += " (line " + std::to_string(line) + ")";
    return s;
  }

  std::size_t offset_;
  std::size_t line_;
};

/// An iterative method failed to reach its tolerance.
class NumericError : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug (or a false statement).
class InvariantError : public Error {
public:
  using Error::Error;
};

/// A configured work cap (spanning-tree count, search nodes) was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// The backtracking HIST search hit its node budget. Never a verdict.
class BudgetExceeded : public ResourceError {
public:
  using ResourceError::ResourceError;
};

/// Requested feature is outside the supported range (long-form graph6, n > 8 labeled scans).
class UnsupportedError : public Error {
public:
  using Error::Error;
};

} // namespace hist
