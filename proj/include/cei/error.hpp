#pragma once

#include <stdexcept>
#include <string>

namespace cei {

// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a computation would exceed a configured size limit
// (lcm lattice size, boundary matrix entries, search space).
class ResourceGuard : public std::runtime_error {
 public:
  ResourceGuard(std::string guard, const std::string& what)
      : std::runtime_error(what), guard_(std::move(guard)) {}

  const std::string& guard() const { return guard_; }

 private:
  std::string guard_;
};

}  // namespace cei
