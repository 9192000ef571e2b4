#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quasi {

/// A caller passed arguments outside an operation's domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An object was used out of protocol (e.g. pushing into a finalized stream).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A requested length cannot be realised by overlapping copies of a pattern.
class NotReachableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive enumeration would exceed the configured candidate budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejection sampling gave up; carries the best value it saw.
class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& what, std::size_t best_distance)
      : std::runtime_error(what), best_distance_(best_distance) {}

  std::size_t best_distance() const noexcept { return best_distance_; }

 private:
  std::size_t best_distance_;
};

/// A checked internal invariant (query bound, theorem guarantee) failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quasi
