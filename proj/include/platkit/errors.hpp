#pragma once

#include <stdexcept>
#include <string>

namespace platkit {

/// Malformed textual input (braid words, expressions, JSON documents).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on sizes, indices or strand counts was violated.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource limit (word length, crossing budget) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A supplied certificate failed verification.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace platkit
