#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace localabc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad JSON, alpha outside (0,1], ...).
class InputError : public Error {
  public:
    using Error::Error;
};

/// A mathematical hypothesis of a verified statement does not hold for the
/// given data (boundary zeros, vanishing Wronskian, non-coprime inputs).
class HypothesisFailure : public Error {
  public:
    using Error::Error;
};

/// A zero location lies on or outside the boundary of its domain.
class DomainViolation : public HypothesisFailure {
  public:
    using HypothesisFailure::HypothesisFailure;
};

/// The Wronskian vanishes identically.
class LinearDependence : public HypothesisFailure {
  public:
    using HypothesisFailure::HypothesisFailure;
};

/// An iterative or quadrature procedure did not reach its tolerance.
/// `diagnostics` carries the last estimates or residuals.
class NumericalFailure : public Error {
  public:
    NumericalFailure(const std::string& what, std::vector<double> diagnostics = {})
        : Error(what), diagnostics_(std::move(diagnostics)) {}

    const std::vector<double>& diagnostics() const noexcept { return diagnostics_; }

  private:
    std::vector<double> diagnostics_;
};

}  // namespace localabc
