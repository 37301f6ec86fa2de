#pragma once

#include <stdexcept>
#include <string>

namespace symrange {

/// A series that defines a norm or an operator value does not converge.
class DivergentTail : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input lies outside the domain of the requested operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A certified tail bracket could not be made narrower than the requested
/// tolerance within the term budget.
class ToleranceNotMet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The witness search found no verified domination certificate.  The input
/// may still belong to the range space; the result is inconclusive.
class NoWitnessFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symrange
