#pragma once

#include <stdexcept>

namespace pxg {

// Caller supplied arguments outside an operation's domain.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well formed but exceeds a configured size limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The operation has no meaning for this input (e.g. 2-distinguishing cost of
// a graph that is not 2-distinguishable).
class NotApplicableError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoWitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pxg
