#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adrcode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the 1-based line number of the offending row.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// Input parsed but is semantically invalid (duplicate ids, unknown targets...).
class LoadError : public Error {
 public:
  using Error::Error;
};

/// Evaluation could not be carried out for a case (e.g. an LLT without PT).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace adrcode
