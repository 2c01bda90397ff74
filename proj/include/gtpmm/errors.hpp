#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gtpmm {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad fare policy, unknown mode, inverted range, etc.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Caller violated an operation's precondition (empty category, bad id, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A mandatory pair of PoIs has no connecting path.
class InfeasibleError : public Error {
 public:
  InfeasibleError(std::size_t from, std::size_t to, const std::string& what)
      : Error(what), from_(from), to_(to) {}

  std::size_t from() const noexcept { return from_; }
  std::size_t to() const noexcept { return to_; }

 private:
  std::size_t from_;
  std::size_t to_;
};

// Malformed input file. `line` is 1-based; 0 when the error is file-level.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& msg)
      : Error(file + (line ? ":" + std::to_string(line) : std::string()) +
              ": " + msg),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// Enumeration would exceed the configured size limit.
class GuardError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant, e.g. a DP parent chain with a hole.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gtpmm
