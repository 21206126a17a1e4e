#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sctrl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A subsystem matrix does not have the shape implied by (n, r).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The same parameter name occurs twice. Shared parameters express
/// dependence between entries, which the criteria do not cover.
class DuplicateParameter : public Error {
 public:
  using Error::Error;
};

/// m = 0, n = 0 or r = 0.
class EmptySystem : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A matching handed to a certificate routine admits an augmenting path.
class NotMaximum : public Error {
 public:
  using Error::Error;
};

/// Exhaustive routine called on an instance beyond its size limit.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// The word expansion of the switched controllability matrix would exceed
/// the configured column budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed system document. `line`/`column` are 1-based and zero when the
/// location is only known as a JSON path.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0,
             std::string path = {})
      : Error(what), line_(line), column_(column), path_(std::move(path)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& path() const { return path_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string path_;
};

}  // namespace sctrl
