#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace tropical {

struct Shape {
  std::size_t rows = 0;
  std::size_t cols = 0;

  bool operator==(const Shape&) const = default;
};

inline std::string to_string(Shape s) {
  return std::to_string(s.rows) + "x" + std::to_string(s.cols);
}

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exact sum of two finite parts does not fit in int64.
class IntegerOverflow : public Error {
 public:
  IntegerOverflow(std::int64_t lhs, std::int64_t rhs)
      : Error("integer overflow: " + std::to_string(lhs) + " + " + std::to_string(rhs) +
              " does not fit in a signed 64-bit integer"),
        lhs_(lhs),
        rhs_(rhs) {}

  std::int64_t lhs() const noexcept { return lhs_; }
  std::int64_t rhs() const noexcept { return rhs_; }

 private:
  std::int64_t lhs_;
  std::int64_t rhs_;
};

/// Operand shapes are incompatible. `expected` is the shape the second
/// operand needed to have given the first one; `got` is what it had.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& op, Shape lhs, Shape expected, Shape got)
      : Error(op + ": dimension mismatch: left operand is " + to_string(lhs) +
              ", right operand is " + to_string(got) + " (expected " + to_string(expected) + ")"),
        lhs_(lhs),
        expected_(expected),
        got_(got) {}

  Shape lhs() const noexcept { return lhs_; }
  Shape expected() const noexcept { return expected_; }
  Shape got() const noexcept { return got_; }

 private:
  Shape lhs_;
  Shape expected_;
  Shape got_;
};

class NotSquare : public Error {
 public:
  NotSquare(const std::string& op, Shape got)
      : Error(op + ": matrix must be square, got " + to_string(got)), got_(got) {}

  Shape got() const noexcept { return got_; }

 private:
  Shape got_;
};

/// Base for MatrixText parse failures. Line and column numbers are 1-based.
class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public ParseError {
 public:
  EmptyInput() : ParseError("parse error: input contains no matrix rows") {}
};

class RaggedRows : public ParseError {
 public:
  RaggedRows(std::size_t line, std::size_t expected, std::size_t got)
      : ParseError("parse error: line " + std::to_string(line) + " has " + std::to_string(got) +
                   " entries, expected " + std::to_string(expected)),
        line_(line),
        expected_(expected),
        got_(got) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t expected() const noexcept { return expected_; }
  std::size_t got() const noexcept { return got_; }

 private:
  std::size_t line_;
  std::size_t expected_;
  std::size_t got_;
};

class BadToken : public ParseError {
 public:
  BadToken(std::size_t line, std::size_t column, std::string token)
      : ParseError("parse error: line " + std::to_string(line) + ", entry " +
                   std::to_string(column) + ": bad token '" + token +
                   "' (expected 'E' or a 64-bit integer)"),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

}  // namespace tropical
