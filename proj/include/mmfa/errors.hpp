#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmfa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  // 1-based; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

class TaskError : public Error {
 public:
  using Error::Error;
};

// An API used out of order, e.g. an unfitted model.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed model input, e.g. an out-of-vocabulary token id.
class InputError : public Error {
 public:
  using Error::Error;
};

// A prerequisite artifact (checkpoint, cache entry) is missing.
class DependencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace mmfa
