#include "owa/error.hpp"

#include <utility>

namespace owa {

DimensionError::DimensionError(std::size_t weights, std::size_t inputs)
    : Error("dimension mismatch: weight vector has length " + std::to_string(weights) +
            " but input vector has length " + std::to_string(inputs)),
      weights_(weights),
      inputs_(inputs) {}

CalibrationError::CalibrationError(double best_parameter, double residual, int iterations)
    : Error("exponential preset did not converge after " + std::to_string(iterations) +
            " iterations (best parameter " + std::to_string(best_parameter) + ", orness residual " +
            std::to_string(residual) + ")"),
      best_parameter_(best_parameter),
      residual_(residual),
      iterations_(iterations) {}

NumericalInstabilityError::NumericalInstabilityError(const std::string& what, double orness,
                                                     double residual,
                                                     std::vector<double> raw_weights)
    : Error(what), orness_(orness), residual_(residual), raw_(std::move(raw_weights)) {}

}  // namespace owa
