#include "crossdiff/solver_pb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "crossdiff/banded.hpp"
#include "crossdiff/errors.hpp"
#include "crossdiff/fem.hpp"
#include "solver_internal.hpp"

namespace crossdiff {

namespace {

constexpr double kFractionSlack = 1e-2;   // monitored overshoot band
constexpr double kFractionBlowup = 1.0;   // hard guard: r outside [-1, 2]

BandedMatrix to_banded(const Tridiagonal& A) {
    BandedMatrix m(A.size(), 1);
    for (std::size_t i = 0; i < A.size(); ++i) {
        m.add(i, i, A.diag[i]);
        if (i > 0) m.add(i, i - 1, A.sub[i - 1]);
        if (i + 1 < A.size()) m.add(i, i + 1, A.sup[i]);
    }
    return m;
}

}  // namespace

std::pair<NodalField, NodalField> pb_sweep(const NodalField& u_lin, const NodalField& r_lin,
                                           const NodalField& u_prev, const NodalField& r_prev,
                                           double t_new, const SchemeParams& params,
                                           const LotkaVolterraParams& lv, const DriftField& q,
                                           TransportForm form) {
    require_same_mesh(u_lin, r_lin);
    require_same_mesh(u_lin, u_prev);
    require_same_mesh(u_lin, r_prev);
    const MeshPtr mesh = u_lin.mesh();
    const std::size_t n = mesh->node_count();
    const auto w = mesh->lumped_weights();
    const double tau = params.tau;
    const Epsilon eps = params.eps;

    std::vector<double> q_nodes;
    if (!q.is_zero()) {
        q_nodes = internal::drift_at_nodes(q, t_new, *mesh);
    }

    // Frozen reaction terms F_1, F_2 evaluated on the truncated iterate.
    std::vector<double> f_total(n);
    std::vector<double> f_ratio(n);
    for (std::size_t l = 0; l < n; ++l) {
        const auto rr =
            ratio_reactions(truncate(u_lin[l], eps), truncate(r_lin[l], eps), lv);
        f_total[l] = rr.total;
        f_ratio[l] = rr.ratio;
    }

    // Total-density solve.
    const auto weight = midpoint_truncation(u_lin, eps);
    const Tridiagonal A = assemble_weighted_stiffness(weight, *mesh);
    BandedSystem u_system{to_banded(A), std::vector<double>(n, 0.0)};
    for (std::size_t l = 0; l < n; ++l) {
        u_system.matrix.add(l, l, w[l] / tau);
        u_system.rhs[l] = w[l] * (u_prev[l] / tau + f_total[l]);
    }
    if (!q_nodes.empty()) {
        const auto drift = assemble_drift_load(weight, q_nodes, *mesh);
        for (std::size_t l = 0; l < n; ++l) {
            u_system.rhs[l] -= drift[l];
        }
    }
    NodalField u_next(mesh, solve_banded(u_system));

    // Fraction solve: implicit diffusion, explicit transport.
    const std::vector<double> unit_weight(mesh->element_count(), 1.0);
    const Tridiagonal K = assemble_weighted_stiffness(unit_weight, *mesh);
    BandedSystem r_system{BandedMatrix(n, 1), std::vector<double>(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) {
        r_system.matrix.add(i, i, w[i] / tau + params.delta * K.diag[i]);
        if (i > 0) r_system.matrix.add(i, i - 1, params.delta * K.sub[i - 1]);
        if (i + 1 < n) r_system.matrix.add(i, i + 1, params.delta * K.sup[i]);
        r_system.rhs[i] = w[i] * (r_prev[i] / tau + f_ratio[i]);
    }

    if (form == TransportForm::Chi) {
        const auto grad_u = recovered_gradient(u_lin);
        const auto grad_r = recovered_gradient(r_lin);
        for (std::size_t l = 0; l < n; ++l) {
            const double drift = q_nodes.empty() ? 0.0 : q_nodes[l];
            r_system.rhs[l] += w[l] * (grad_u[l] + drift) * grad_r[l];
        }
    } else {
        const auto grad_u = element_gradient(u_lin);
        const auto grad_r = element_gradient(r_lin);
        for (std::size_t j = 0; j < mesh->element_count(); ++j) {
            const double q_mid =
                q_nodes.empty() ? 0.0 : 0.5 * (q_nodes[j] + q_nodes[j + 1]);
            const double c = (grad_u[j] + q_mid) * grad_r[j];
            r_system.rhs[j] -= c;
            r_system.rhs[j + 1] += c;
        }
    }
    NodalField r_next(mesh, solve_banded(r_system));

    return {std::move(u_next), std::move(r_next)};
}

PbStep pb_step(const PbState& state, const SchemeParams& params,
               const LotkaVolterraParams& lv, const DriftField& q, TransportForm form) {
    params.validate();
    lv.validate();
    const double t_new = state.time + params.tau;
    NodalField lin_u = state.u;
    NodalField lin_r = state.r;
    double update = 0.0;
    for (int k = 1; k <= params.max_inner; ++k) {
        auto [next_u, next_r] =
            pb_sweep(lin_u, lin_r, state.u, state.r, t_new, params, lv, q, form);
        update = std::max(max_abs_diff(next_u, lin_u), max_abs_diff(next_r, lin_r));
        if (update < params.tol) {
            return PbStep{std::move(next_u), std::move(next_r), std::move(lin_u),
                          std::move(lin_r), k, update};
        }
        lin_u = std::move(next_u);
        lin_r = std::move(next_r);
    }
    throw FixedPointError("pb_step: inner iteration cap reached", update, params.max_inner,
                          t_new);
}

std::pair<NodalField, NodalField> reconstruct_species(const NodalField& u,
                                                      const NodalField& r) {
    require_same_mesh(u, r);
    std::vector<double> u1(u.size());
    std::vector<double> u2(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        u1[i] = r[i] * u[i];
        u2[i] = (1.0 - r[i]) * u[i];
    }
    return {NodalField(u.mesh(), std::move(u1)), NodalField(u.mesh(), std::move(u2))};
}

PbRunResult pb_run(const NodalField& u0, const NodalField& r0, const SchemeParams& params,
                   const LotkaVolterraParams& lv, const DriftField& q,
                   std::span<const double> snapshot_times, TransportForm form,
                   const std::function<double(double, double)>& exact_total) {
    params.validate();
    lv.validate();
    require_same_mesh(u0, r0);
    const long steps = params.step_count();
    const auto snap_idx = internal::snapshot_steps(snapshot_times, params.tau, steps);

    PbRunResult result;
    result.min_u = u0.min_value();
    result.min_r = r0.min_value();
    result.max_r = r0.max_value();

    const auto check_fraction = [&](const PbState& s) {
        if (s.r.min_value() < -kFractionBlowup || s.r.max_value() > 1.0 + kFractionBlowup) {
            throw SolutionRangeError("pb_run: fraction left [-1, 2] at t = " +
                                     std::to_string(s.time));
        }
    };

    const auto record = [&](const PbState& s, int inner) {
        const auto [u1, u2] = reconstruct_species(s.u, s.r);
        DiagnosticsRecord rec;
        rec.time = s.time;
        rec.osc_u = s.u.mesh()->is_uniform()
                        ? oscillation(u1) + oscillation(u2)
                        : std::numeric_limits<double>::quiet_NaN();
        rec.mass_u1 = discrete_mass(u1);
        rec.mass_u2 = discrete_mass(u2);
        rec.min_u = s.u.min_value();
        rec.max_u = s.u.max_value();
        if (exact_total) {
            rec.rel_l2_error = relative_l2_error(
                s.u, [&](double x) { return exact_total(s.time, x); });
        }
        rec.inner_iterations = inner;
        result.diagnostics.push_back(std::move(rec));
    };

    PbState state{u0, r0, 0.0};
    check_fraction(state);
    record(state, 0);
    std::size_t next_snap = 0;
    if (next_snap < snap_idx.size() && snap_idx[next_snap] == 0) {
        result.snapshots.push_back(state);
        ++next_snap;
    }

    for (long n = 1; n <= steps; ++n) {
        PbStep step = pb_step(state, params, lv, q, form);
        state = PbState{std::move(step.u), std::move(step.r),
                        static_cast<double>(n) * params.tau};
        check_fraction(state);
        result.min_u = std::min(result.min_u, state.u.min_value());
        result.min_r = std::min(result.min_r, state.r.min_value());
        result.max_r = std::max(result.max_r, state.r.max_value());
        result.max_inner_iterations =
            std::max(result.max_inner_iterations, step.inner_iterations);
        record(state, step.inner_iterations);
        if (next_snap < snap_idx.size() && snap_idx[next_snap] == n) {
            result.snapshots.push_back(state);
            ++next_snap;
        }
    }
    result.fraction_band_ok =
        result.min_r >= -kFractionSlack && result.max_r <= 1.0 + kFractionSlack;
    return result;
}

}  // namespace crossdiff
