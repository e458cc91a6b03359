#pragma once

#include <stdexcept>
#include <string>

namespace tidx {

/// Failure classes; the CLI maps them onto exit statuses.
enum class ErrorKind {
  kInvalidSymbol,   // malformed symbol data, rank or kind mismatch
  kParse,           // unreadable symbol file
  kNotInvertible,   // symbol vanishes (numerically) somewhere on the manifold
  kNumerics,        // unstabilized kernel dims, residual failure, non-integral Chern value
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SymbolError : public Error {
 public:
  explicit SymbolError(const std::string& what) : Error(ErrorKind::kInvalidSymbol, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::kParse, what) {}
};

class NotInvertibleError : public Error {
 public:
  explicit NotInvertibleError(const std::string& what) : Error(ErrorKind::kNotInvertible, what) {}
};

class NumericsError : public Error {
 public:
  explicit NumericsError(const std::string& what) : Error(ErrorKind::kNumerics, what) {}
};

/// Kernel dimensions disagree across truncation sizes.
class UnstabilizedError : public NumericsError {
 public:
  explicit UnstabilizedError(const std::string& what) : NumericsError("unstabilized: " + what) {}
};

/// Kernel candidates fail the exact-operator residual test.
class ResidualFailureError : public NumericsError {
 public:
  explicit ResidualFailureError(const std::string& what)
      : NumericsError("residual failure: " + what) {}
};

}  // namespace tidx
