#pragma once

#include <stdexcept>
#include <string>

namespace fastfuse {

// Violated precondition of a library call (bad dimensions, out-of-range
// samples, invalid parameters).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Model file missing, corrupt, or using an unsupported operator.
class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fastfuse
