#pragma once

#include <stdexcept>
#include <string>

namespace bezier_ifs {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A requested computation exceeds a configured work or memory cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An object could not be built from its inputs (e.g. singular P matrix).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A digit sequence is not in the eventually-zeros canonical form.
class CanonicalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact division left Z[1/2][i].
class NotDyadicError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A checked identity did not hold. The message names the identity.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A file could not be read or written, or its contents are malformed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown keys, unparsable values, empty lists.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bezier_ifs
