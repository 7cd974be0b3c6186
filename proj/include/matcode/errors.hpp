#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace matcode {

// Raised when an exact enumeration would exceed its configured budget.
// Distinct from "no result exists": the caller may retry with a larger budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a checked mathematical contract fails on a concrete instance.
// Carries the offending instance (serialized) so it can be dumped for triage.
class ContractViolation : public std::runtime_error {
 public:
  explicit ContractViolation(const std::string& what, std::string diagnostic = {})
      : std::runtime_error(what), diagnostic_(std::move(diagnostic)) {}

  const std::string& diagnostic() const noexcept { return diagnostic_; }

 private:
  std::string diagnostic_;
};

// Raised when a constructive pipeline cannot complete on the given instance
// (for example, too few short cycles on an input far below the asymptotic
// regime). Not a usage error and not a disproof of anything.
class PipelineFailure : public std::runtime_error {
 public:
  explicit PipelineFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace matcode
