#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcheb {

/// Caller passed arguments that violate an operation's preconditions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well formed but mathematically undefined for its inputs,
/// e.g. a probability distribution built from a polynomial with a negative
/// coefficient. Carries the offending exponent when there is one.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what,
                       std::optional<std::vector<int>> witness = std::nullopt)
      : std::domain_error(what), witness_(std::move(witness)) {}

  const std::optional<std::vector<int>>& witness() const noexcept { return witness_; }

 private:
  std::optional<std::vector<int>> witness_;
};

/// A configured computation budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symcheb
