#pragma once

#include <span>
#include <vector>

#include "crossdiff/kinetics.hpp"
#include "crossdiff/mesh.hpp"

namespace crossdiff::internal {

/// Samples the drift at the nodes for one time level and checks it vanishes
/// at the boundary.
std::vector<double> drift_at_nodes(const DriftField& q, double t, const Mesh& mesh);

/// Maps requested snapshot times to step indices (nearest step, clamped to
/// [0, steps]), sorted and deduplicated.
std::vector<long> snapshot_steps(std::span<const double> times, double tau, long steps);

}  // namespace crossdiff::internal
