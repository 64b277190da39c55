#pragma once

#include <stdexcept>
#include <string>

namespace zetakit {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the domain an operation is specified for.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Evaluation requested at a pole of the function.
class PoleError : public DomainError {
public:
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

/// Result magnitude exceeds the floating-point range.
class OverflowError : public Error {
public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

/// An iterative scheme failed to reach its tolerance within its budget.
class ConvergenceError : public Error {
public:
  explicit ConvergenceError(const std::string& what) : Error(what) {}
};

/// A truncated series cannot certify the requested tolerance with the
/// available table (sieve limit or term cap too small).
class InsufficientTableError : public Error {
public:
  explicit InsufficientTableError(const std::string& what) : Error(what) {}
};

/// Malformed input file; carries a 1-based line number when known.
class ParseError : public Error {
public:
  ParseError(const std::string& what, long line = -1) : Error(what), line_(line) {}
  long line() const { return line_; }

private:
  long line_;
};

/// Filesystem-level failure (missing file, unreadable path).
class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace zetakit
