#pragma once

#include <stdexcept>
#include <string>

namespace minuscule {

/// Unsupported Cartan family/rank or an out-of-range node.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically invalid input: non-dominant or non-minuscule weights,
/// malformed distributions, mismatched dimensions.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured size cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A consistency check that should never fail did.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minuscule
