#pragma once

#include <utility>

#include "crossdiff/mesh.hpp"

namespace crossdiff {

/// Parameters of the self-similar contact-inhibition benchmark on (−L, L):
/// a compactly supported parabolic profile whose support grows like
/// (t + t*)^{1/3}, split into two species at a moving contact point.
struct BarenblattParams {
    double t_star = 0.01;      // time offset, > 0
    double x0 = -0.25;         // initial contact point, inside the support
    double half_length = 2.0;  // domain half-length L

    /// Requires t_star > 0 and |x0| < support_radius(0).
    void validate() const;

    /// Largest T with support_radius(T) < L, so the profile vanishes at ±L
    /// on [0, T].
    double validity_horizon() const;
};

/// Self-similar source solution of u_t = (u u_x)_x:
///   B(t, x) = 2 (t + t*)^{−1/3} [1 − x² (t + t*)^{−2/3} / 12]_+ .
double barenblatt(double t, double x, const BarenblattParams& p);

/// Support radius ρ(t) = √12 (t + t*)^{1/3}.
double support_radius(double t, const BarenblattParams& p);

/// Contact-point trajectory η(t) = x0 (1 + t/t*)^{1/3}.
double contact_point(double t, const BarenblattParams& p);

struct SpeciesPair {
    double u1;
    double u2;
};

/// Heaviside split of the profile at the contact point:
///   u1 = H(x − η(t)) B(t, x),  u2 = H(η(t) − x) B(t, x),
/// with H(0) = 1/2 so that u1 + u2 = B everywhere.
SpeciesPair segregated_solution(double t, double x, const BarenblattParams& p);

/// Invasion initial data on (−2, 2): a narrow Gaussian colony
/// u10(x) = 0.22 exp(−(x − 0.25)²/0.001) inside a resident population
/// u20 = 0.45 − u10, so the total density is the constant 0.45.
std::pair<NodalField, NodalField> invasion_initial(MeshPtr mesh);

/// Nodal initial data of the contact-inhibition benchmark. The species
/// profiles sample the segregated solution at t = 0; the fraction field is
/// the sharp indicator r0 = 1 right of x0 (where species 1 lives), 0 left of
/// it, and 1/2 at a node that lands exactly on x0.
struct SegregatedInitial {
    NodalField u1;
    NodalField u2;
    NodalField r;
};

SegregatedInitial contact_inhibition_initial(MeshPtr mesh, const BarenblattParams& p);

}  // namespace crossdiff
