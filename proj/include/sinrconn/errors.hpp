#pragma once

#include <stdexcept>
#include <string>

namespace sinrconn {

// Caller violated an operation's precondition (bad parameters, shared nodes,
// zero-length links, instance too large for an exhaustive oracle, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A file did not match the expected JSON schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algorithm failed to make progress or produced an output that its own
// postcondition rejects. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sinrconn
