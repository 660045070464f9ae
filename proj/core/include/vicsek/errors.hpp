#pragma once

#include <stdexcept>
#include <string>

namespace vicsek {

// Precondition violations: unknown vertex, wrong vertex class, malformed input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A requested level exceeds the configured build cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact linear algebra met a singular / rank-deficient system.
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A verification clause failed. `clause()` names it.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string clause, const std::string& what)
      : std::runtime_error(clause + ": " + what), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

}  // namespace vicsek
