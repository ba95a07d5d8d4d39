#pragma once

#include <vector>

#include "crossdiff/mesh.hpp"

namespace crossdiff {

/// Truncation parameter, restricted to (0, 1).
class Epsilon {
public:
    explicit Epsilon(double value);

    double value() const { return value_; }
    double inverse() const { return 1.0 / value_; }

private:
    double value_;
};

/// Clamp s to the band [ε, 1/ε]. Monotone, 1-Lipschitz, identity on the band.
double truncate(double s, Epsilon eps);

/// Elementwise-constant lift of the truncation: on element (x_j, x_{j+1}) the
/// value is truncate(z((x_j + x_{j+1})/2)) = truncate((z_j + z_{j+1})/2).
/// The result is strictly positive for any input field.
std::vector<double> midpoint_truncation(const NodalField& z, Epsilon eps);

}  // namespace crossdiff
