#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freiman {

// Base for every error the library raises on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AmbientMismatch : public Error {
 public:
  AmbientMismatch(std::size_t lhs, std::size_t rhs)
      : Error("ambient variable count mismatch: " + std::to_string(lhs) +
              " vs " + std::to_string(rhs)) {}
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(long lhs, long rhs)
      : Error("degree mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class EmptyDomain : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  malformed_token,
  index_out_of_range,
  wrong_length,
  negative_exponent,
};

inline const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::malformed_token: return "malformed token";
    case ParseErrorKind::index_out_of_range: return "variable index out of range";
    case ParseErrorKind::wrong_length: return "wrong exponent vector length";
    case ParseErrorKind::negative_exponent: return "negative exponent";
  }
  return "parse error";
}

// Parse failure with the byte offset into the input where it was detected.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& detail)
      : Error(std::string(to_string(kind)) + " at position " +
              std::to_string(position) + ": " + detail),
        kind_(kind),
        position_(position) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

}  // namespace freiman
