#include "crossdiff/solver_pdelta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "crossdiff/banded.hpp"
#include "crossdiff/errors.hpp"
#include "crossdiff/fem.hpp"
#include "solver_internal.hpp"

namespace crossdiff {

namespace internal {

std::vector<double> drift_at_nodes(const DriftField& q, double t, const Mesh& mesh) {
    std::vector<double> values(mesh.node_count());
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = q(t, mesh.node(i));
    }
    if (std::abs(values.front()) > 1e-12 || std::abs(values.back()) > 1e-12) {
        throw std::invalid_argument("drift must vanish on the domain boundary");
    }
    return values;
}

std::vector<long> snapshot_steps(std::span<const double> times, double tau, long steps) {
    std::vector<long> idx;
    idx.reserve(times.size());
    for (double t : times) {
        const long k = std::clamp(std::lround(t / tau), 0L, steps);
        idx.push_back(k);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

}  // namespace internal

namespace {

// Adds `scale * A` into the interleaved two-species matrix, rows in species
// block `row_sp`, columns in species block `col_sp`.
void add_species_block(BandedMatrix& m, const Tridiagonal& A, int row_sp, int col_sp,
                       double scale) {
    const std::size_t n = A.size();
    for (std::size_t l = 0; l < n; ++l) {
        const std::size_t row = 2 * l + static_cast<std::size_t>(row_sp);
        m.add(row, 2 * l + static_cast<std::size_t>(col_sp), scale * A.diag[l]);
        if (l > 0) {
            m.add(row, 2 * (l - 1) + static_cast<std::size_t>(col_sp), scale * A.sub[l - 1]);
        }
        if (l + 1 < n) {
            m.add(row, 2 * (l + 1) + static_cast<std::size_t>(col_sp), scale * A.sup[l]);
        }
    }
}

}  // namespace

std::pair<NodalField, NodalField> pdelta_sweep(const NodalField& u1_lin,
                                               const NodalField& u2_lin,
                                               const NodalField& u1_prev,
                                               const NodalField& u2_prev, double t_new,
                                               const SchemeParams& params,
                                               const LotkaVolterraParams& lv,
                                               const DriftField& q) {
    require_same_mesh(u1_lin, u2_lin);
    require_same_mesh(u1_lin, u1_prev);
    require_same_mesh(u1_lin, u2_prev);
    const MeshPtr mesh = u1_lin.mesh();
    const std::size_t n = mesh->node_count();
    const auto w = mesh->lumped_weights();
    const double tau = params.tau;
    const double delta = params.delta;
    const Epsilon eps = params.eps;

    const auto weight1 = midpoint_truncation(u1_lin, eps);
    const auto weight2 = midpoint_truncation(u2_lin, eps);
    std::vector<double> weight_sum(weight1.size());
    for (std::size_t j = 0; j < weight_sum.size(); ++j) {
        weight_sum[j] = weight1[j] + weight2[j];
    }
    const Tridiagonal A1 = assemble_weighted_stiffness(weight1, *mesh);
    const Tridiagonal A2 = assemble_weighted_stiffness(weight2, *mesh);
    const Tridiagonal S = assemble_weighted_stiffness(weight_sum, *mesh);

    BandedSystem system{BandedMatrix(2 * n, 3), std::vector<double>(2 * n, 0.0)};

    // Cross-diffusion couples the species through ∂_x(u1 + u2).
    add_species_block(system.matrix, A1, 0, 0, 1.0 + 0.5 * delta);
    add_species_block(system.matrix, A1, 0, 1, 1.0 + 0.5 * delta);
    add_species_block(system.matrix, A2, 1, 0, 1.0 + 0.5 * delta);
    add_species_block(system.matrix, A2, 1, 1, 1.0 + 0.5 * delta);
    add_species_block(system.matrix, S, 0, 0, 0.5 * delta);
    add_species_block(system.matrix, S, 1, 1, 0.5 * delta);
    for (std::size_t l = 0; l < n; ++l) {
        system.matrix.add(2 * l, 2 * l, (1.0 / tau - lv.alpha[0]) * w[l]);
        system.matrix.add(2 * l + 1, 2 * l + 1, (1.0 / tau - lv.alpha[1]) * w[l]);
    }

    for (std::size_t l = 0; l < n; ++l) {
        const double lam1_prev = truncate(u1_prev[l], eps);
        const double lam2_prev = truncate(u2_prev[l], eps);
        const double competition1 =
            truncate(u1_lin[l], eps) * (lv.beta[0][0] * lam1_prev + lv.beta[0][1] * lam2_prev);
        const double competition2 =
            truncate(u2_lin[l], eps) * (lv.beta[1][0] * lam1_prev + lv.beta[1][1] * lam2_prev);
        system.rhs[2 * l] = w[l] * (u1_prev[l] / tau - competition1);
        system.rhs[2 * l + 1] = w[l] * (u2_prev[l] / tau - competition2);
    }

    if (!q.is_zero()) {
        const auto q_nodes = internal::drift_at_nodes(q, t_new, *mesh);
        const auto drift1 = assemble_drift_load(weight1, q_nodes, *mesh);
        const auto drift2 = assemble_drift_load(weight2, q_nodes, *mesh);
        for (std::size_t l = 0; l < n; ++l) {
            system.rhs[2 * l] -= drift1[l];
            system.rhs[2 * l + 1] -= drift2[l];
        }
    }

    const auto x = solve_banded(system);
    std::vector<double> v1(n);
    std::vector<double> v2(n);
    for (std::size_t l = 0; l < n; ++l) {
        v1[l] = x[2 * l];
        v2[l] = x[2 * l + 1];
    }
    return {NodalField(mesh, std::move(v1)), NodalField(mesh, std::move(v2))};
}

PdeltaStep pdelta_step(const PdeltaState& state, const SchemeParams& params,
                       const LotkaVolterraParams& lv, const DriftField& q) {
    params.validate();
    lv.validate();
    const double t_new = state.time + params.tau;
    NodalField lin1 = state.u1;
    NodalField lin2 = state.u2;
    double update = 0.0;
    for (int k = 1; k <= params.max_inner; ++k) {
        auto [next1, next2] =
            pdelta_sweep(lin1, lin2, state.u1, state.u2, t_new, params, lv, q);
        update = std::max(max_abs_diff(next1, lin1), max_abs_diff(next2, lin2));
        if (update < params.tol) {
            return PdeltaStep{std::move(next1), std::move(next2), std::move(lin1),
                              std::move(lin2), k, update};
        }
        lin1 = std::move(next1);
        lin2 = std::move(next2);
    }
    throw FixedPointError("pdelta_step: inner iteration cap reached", update,
                          params.max_inner, t_new);
}

PdeltaRunResult pdelta_run(const NodalField& u10, const NodalField& u20,
                           const SchemeParams& params, const LotkaVolterraParams& lv,
                           const DriftField& q, std::span<const double> snapshot_times,
                           const std::function<double(double, double)>& exact_total) {
    params.validate();
    lv.validate();
    require_same_mesh(u10, u20);
    const long steps = params.step_count();
    const auto snap_idx = internal::snapshot_steps(snapshot_times, params.tau, steps);

    PdeltaRunResult result;
    result.min_u1 = u10.min_value();
    result.min_u2 = u20.min_value();

    const auto record = [&](const PdeltaState& s, int inner) {
        const NodalField u = add(s.u1, s.u2);
        DiagnosticsRecord rec;
        rec.time = s.time;
        rec.osc_u = u.mesh()->is_uniform()
                        ? oscillation(s.u1) + oscillation(s.u2)
                        : std::numeric_limits<double>::quiet_NaN();
        rec.mass_u1 = discrete_mass(s.u1);
        rec.mass_u2 = discrete_mass(s.u2);
        rec.min_u = u.min_value();
        rec.max_u = u.max_value();
        if (exact_total) {
            rec.rel_l2_error = relative_l2_error(
                u, [&](double x) { return exact_total(s.time, x); });
        }
        rec.inner_iterations = inner;
        result.diagnostics.push_back(std::move(rec));
    };

    PdeltaState state{u10, u20, 0.0};
    record(state, 0);
    std::size_t next_snap = 0;
    if (next_snap < snap_idx.size() && snap_idx[next_snap] == 0) {
        result.snapshots.push_back(state);
        ++next_snap;
    }

    for (long n = 1; n <= steps; ++n) {
        PdeltaStep step = pdelta_step(state, params, lv, q);
        state = PdeltaState{std::move(step.u1), std::move(step.u2),
                            static_cast<double>(n) * params.tau};
        result.min_u1 = std::min(result.min_u1, state.u1.min_value());
        result.min_u2 = std::min(result.min_u2, state.u2.min_value());
        result.max_inner_iterations = std::max(result.max_inner_iterations,
                                               step.inner_iterations);
        record(state, step.inner_iterations);
        if (next_snap < snap_idx.size() && snap_idx[next_snap] == n) {
            result.snapshots.push_back(state);
            ++next_snap;
        }
    }
    return result;
}

}  // namespace crossdiff
