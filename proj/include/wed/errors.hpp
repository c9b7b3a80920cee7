#pragma once

#include <stdexcept>
#include <string>

namespace wed {

// Caller handed in something that violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input exceeds the desk-scale cap of an exponential routine.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed graph6 / edge-list text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_order_at_most(int n, int cap, const char* what) {
  if (n > cap) {
    throw SizeLimitError(std::string(what) + ": order " + std::to_string(n) +
                         " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace wed
