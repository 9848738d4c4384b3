#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitgraph {

// Base for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A graph value would violate its invariants (dangling endpoint, duplicate id).
class GraphError : public Error {
 public:
  using Error::Error;
};

// A split specification is malformed or fails validation.
class SpecError : public Error {
 public:
  using Error::Error;
};

// Matrix shapes do not compose.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A combinatorial routine was asked to work beyond its size guard.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed. Carries the file name and 1-based line.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

}  // namespace splitgraph
