#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace owa {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Weight and input vectors disagree in length.
class DimensionError : public Error {
 public:
  DimensionError(std::size_t weights, std::size_t inputs);
  std::size_t weights_length() const { return weights_; }
  std::size_t inputs_length() const { return inputs_; }

 private:
  std::size_t weights_;
  std::size_t inputs_;
};

/// The method cannot represent the request at all (e.g. maxent at orness 0 or 1).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Exponential preset failed to hit the requested orness within the iteration cap.
class CalibrationError : public Error {
 public:
  CalibrationError(double best_parameter, double residual, int iterations);
  double best_parameter() const { return best_parameter_; }
  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double best_parameter_;
  double residual_;
  int iterations_;
};

/// The numerical solution broke down. The raw (invalid) weights are kept for
/// diagnostics when they are finite, but never handed out as a WeightVector.
class NumericalInstabilityError : public Error {
 public:
  NumericalInstabilityError(const std::string& what, double orness, double residual,
                            std::vector<double> raw_weights);
  double orness() const { return orness_; }
  double residual() const { return residual_; }
  const std::vector<double>& raw_weights() const { return raw_; }

 private:
  double orness_;
  double residual_;
  std::vector<double> raw_;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A broken internal invariant; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace owa
