#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cuntz {

/// Operands live over different alphabets (different d).
class AlphabetMismatch : public std::invalid_argument {
 public:
  AlphabetMismatch(unsigned lhs, unsigned rhs)
      : std::invalid_argument("alphabet mismatch: d=" + std::to_string(lhs) +
                              " vs d=" + std::to_string(rhs)) {}
};

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed text, JSON, or system description.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an intermediate element exceeds the configured term cap.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::size_t terms, std::size_t limit)
      : std::runtime_error("term limit exceeded: " + std::to_string(terms) +
                           " terms (limit " + std::to_string(limit) + ")"),
        terms_(terms),
        limit_(limit) {}

  std::size_t terms() const noexcept { return terms_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t terms_;
  std::size_t limit_;
};

/// A construction whose defining relations do not hold.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cuntz
