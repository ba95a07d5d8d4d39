#pragma once

#include <array>
#include <vector>

#include "crossdiff/kinetics.hpp"

namespace crossdiff {

/// Sampled trajectory of a scalar ODE.
struct ScalarSeries {
    std::vector<double> time;
    std::vector<double> value;
};

/// Sampled trajectory of the two-species system.
struct PairSeries {
    std::vector<double> time;
    std::vector<double> u1;
    std::vector<double> u2;
};

/// Integrate the logistic law U' = U(α − βU), U(0) = u0, with the classical
/// fourth-order Runge–Kutta scheme at fixed step dt (last step shortened to
/// land on t_end). Throws std::invalid_argument on dt ≤ 0 and
/// std::runtime_error when the trajectory blows up.
ScalarSeries simulate_logistic(double alpha, double beta, double u0, double t_end, double dt);

/// A species that grows logistically until t_star and then splits into two
/// populations with initial shares theta and 1 − theta of the total.
struct SplitScenario {
    double alpha_pre = 1.0;
    double beta_pre = 1.0;
    double u0 = 1.0;          // initial population, > 0
    double t_star = 1.0;      // time of the split
    double theta = 0.5;       // share of species 1 at the split, in [0, 1]
    LotkaVolterraParams post; // two-species coefficients after the split
    double t_end = 2.0;

    void validate() const;
};

/// Logistic growth up to t_star, two-species Lotka–Volterra afterwards, same
/// integrator order throughout. Before the split the columns carry the
/// prospective shares (theta U, (1 − theta) U) so that u1 + u2 = U for all t.
PairSeries simulate_split(const SplitScenario& scenario, double dt);

/// Equilibria of the two-species system. Non-differentiated coefficients
/// admit a continuum U1 + U2 = α/β (plus the origin); differentiated ones a
/// finite set of nonnegative points.
struct EquilibriumSet {
    bool has_continuum = false;
    double continuum_level = 0.0;               // U1 + U2 = level, U_i ≥ 0
    std::vector<std::array<double, 2>> points;  // isolated equilibria
    bool degenerate_interior = false;           // det β = 0, no interior point
};

EquilibriumSet equilibria(const LotkaVolterraParams& p);

}  // namespace crossdiff
