// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <stdexcept>
#include <string>

namespace mwcr {

/// Argument outside the mathematical domain of an operation (negative time,
/// probability outside (0,1), non-positive parameter).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input data cannot support the requested computation (empty sample,
/// unparseable file, single-cause data).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical evaluation failed (non-finite value, nonpositive information,
/// finite-difference step leaving the support).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Conditional reference prior has zero information because the relevant
// cause was never observed.
class PriorDegenerate : public DataError {
 public:
  explicit PriorDegenerate(const std::string& what)
      : DataError("prior degenerate: " + what) {}
};

class InformationNonpositive : public NumericError {
 public:
  explicit InformationNonpositive(const std::string& what)
      : NumericError("information nonpositive: " + what) {}
};

// Raised by run_chain when a sweep fails; carries the iteration index.
class ChainAborted : public NumericError {
 public:
  ChainAborted(long iteration, const std::string& what)
      : NumericError("chain aborted at iteration " + std::to_string(iteration) + ": " + what),
        iteration_(iteration) {}

  long iteration() const noexcept { return iteration_; }

 private:
  long iteration_;
};

}  // namespace mwcr
