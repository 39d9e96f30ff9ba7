#pragma once

#include <stdexcept>
#include <string>

namespace fadesde {

// Precondition violated by the caller (argument outside the stated domain).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Invalid object definition (bad family parameters, malformed knots, ...).
class ConstructionError : public std::invalid_argument {
 public:
  explicit ConstructionError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A numerical routine failed to reach its tolerance. Carries the best
// estimate obtained so callers can decide whether to proceed.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double best_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate) {}
  double best_estimate() const { return best_estimate_; }

 private:
  double best_estimate_;
};

}  // namespace fadesde
