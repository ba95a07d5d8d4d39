#pragma once

#include "crossdiff/truncation.hpp"

namespace crossdiff {

/// Time-stepping and fixed-point controls shared by both fully discrete
/// schemes. `delta` is the viscosity weight of the two-species scheme or the
/// artificial diffusion of the fraction equation, depending on the solver.
struct SchemeParams {
    double tau = 1e-3;        // time step
    double delta = 0.0;       // regularization weight, ≥ 0
    Epsilon eps{1e-10};       // coefficient truncation band [ε, 1/ε]
    double tol = 1e-8;        // fixed-point stopping tolerance (max norm)
    int max_inner = 100;      // inner iteration cap
    double t_end = 1.0;       // final time T

    void validate() const;

    /// Number of uniform steps covering [0, T]; T is expected to be an
    /// integer multiple of tau.
    long step_count() const;
};

}  // namespace crossdiff
