#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wfc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad generator parameter (cycle:2, path:0, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Operation applied outside its domain (empty subset, non-forest, non-maximal input).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Graph too large for the requested representation (graph6 short form, 64-bit rows).
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration refused because the order exceeds the configured bound.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, int bound) : Error(what), bound_(bound) {}
  int bound() const noexcept { return bound_; }

 private:
  int bound_;
};

// A theorem check was requested for graphs that do not satisfy its hypotheses.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A malformed record in a line-oriented graph6 stream.
class StreamParseError : public Error {
 public:
  StreamParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wfc
