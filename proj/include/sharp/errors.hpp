#pragma once

#include <stdexcept>
#include <string>

namespace sharp {

/// Mismatched ambient dimensions, out-of-range variable indices and similar
/// caller errors.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition failed: singular matrix, pole at mu = 0,
/// degree condition violated, etc.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent configuration input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression syntax error. `offset` is 1-based into the source string.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& what)
      : std::runtime_error(what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace sharp
