#pragma once

#include <stdexcept>
#include <string>

namespace crossdiff {

/// Two fields that must share a mesh do not.
class MeshMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Banded LU hit a pivot below the singularity threshold.
class SingularSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The inner fixed-point loop of a time step did not reach the tolerance
/// within the iteration cap. Carries the last max-norm update.
class FixedPointError : public std::runtime_error {
public:
    FixedPointError(std::string message, double residual, int iterations, double time)
        : std::runtime_error(std::move(message)),
          residual(residual),
          iterations(iterations),
          time(time) {}

    double residual;
    int iterations;
    double time;
};

/// A monitored solution quantity left its admissible band.
class SolutionRangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace crossdiff
