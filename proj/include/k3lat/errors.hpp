#pragma once

#include <stdexcept>
#include <string>

namespace k3lat {

// Invalid shapes, labels or parameters supplied by a caller.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public UsageError {
 public:
  using UsageError::UsageError;
};

class DegenerateLatticeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotDefiniteError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class GlueError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class OddLatticeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an internal consistency check fails; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace k3lat
