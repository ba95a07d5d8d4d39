#pragma once

#include <functional>
#include <optional>

#include "crossdiff/mesh.hpp"

namespace crossdiff {

/// Per-step monitoring record shared by both schemes. For the (u, r) scheme
/// the species quantities refer to the reconstructed species r·u and
/// (1−r)·u. osc_u is the zero-crossing measure summed over the two species
/// profiles (the total density cannot see contact-point oscillations when
/// the reactions vanish); min_u/max_u track the total density.
struct DiagnosticsRecord {
    double time = 0.0;
    double osc_u = 0.0;
    double mass_u1 = 0.0;
    double mass_u2 = 0.0;
    double min_u = 0.0;
    double max_u = 0.0;
    std::optional<double> rel_l2_error;
    int inner_iterations = 0;
};

/// Zero-crossing measure of ∂_x u on a uniform mesh:
///   osc(u) = h Σ_j |sign(d_{j+1}) − sign(d_j)|,  d_j = u_{j+1} − u_j,
/// with sign(0) = 0, so flat runs do not register. Monotone profiles give 0;
/// a single hump gives 2h. Throws std::invalid_argument on non-uniform meshes.
double oscillation(const NodalField& u);

/// Lumped-norm relative error |u − π^h e|_h / |π^h e|_h against a reference
/// profile evaluated at the nodes; falls back to the absolute error when the
/// reference norm is below 1e-14.
double relative_l2_error(const NodalField& u, const std::function<double(double)>& exact);

/// Lumped mass (u, 1)^h.
double discrete_mass(const NodalField& u);

}  // namespace crossdiff
