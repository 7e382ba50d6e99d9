#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hallpoly {

/// Malformed serialized input; `where` is a byte offset or a JSON path.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::string where)
      : std::runtime_error(what + " (at " + where + ")"), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

private:
  std::string where_;
};

/// A configured time/term/step budget ran out.
class ResourceLimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two derivation routes disagreed, or a derived polynomial has the wrong shape.
class InternalConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Integer evaluation produced a non-integral value.
class NonIntegralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hallpoly
