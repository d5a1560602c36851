#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonotopal/integer.hpp"

namespace zonotopal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds a documented brute-force or memory cap.
class SizeExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when a square minor outside {-1,0,1} (or a cocircuit value outside
/// that range) is found. `rows`/`cols` are empty when the witness is a cocircuit.
class NotTotallyUnimodular : public Error {
 public:
  NotTotallyUnimodular(const std::string& what, std::vector<std::size_t> rows,
                       std::vector<std::size_t> cols, Integer det)
      : Error(what), rows(std::move(rows)), cols(std::move(cols)), determinant(std::move(det)) {}
  explicit NotTotallyUnimodular(const std::string& what) : Error(what) {}

  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Integer determinant;
};

class IsLoop : public Error {
 public:
  using Error::Error;
};

class IsColoop : public Error {
 public:
  using Error::Error;
};

class LoopOrColoop : public Error {
 public:
  using Error::Error;
};

class EmptyPointSet : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

/// A value that must be integral was not; indicates an internal bug.
class NotIntegral : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line(line),
        column(column) {}

  std::size_t line;
  std::size_t column;
};

} // namespace zonotopal
