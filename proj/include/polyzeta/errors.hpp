#pragma once

#include <stdexcept>
#include <string>

namespace polyzeta {

// Input outside an operation's domain (bad n, negative binomial top, z not in (0,1), ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A guarantee the mathematics promises did not hold; points at a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Isolating intervals could not be separated within the refinement budget.
class RefinementExhausted : public std::runtime_error {
 public:
  RefinementExhausted() : std::runtime_error("refinement-exhausted") {}
  explicit RefinementExhausted(const std::string& what)
      : std::runtime_error("refinement-exhausted: " + what) {}
};

}  // namespace polyzeta
