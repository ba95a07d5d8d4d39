// Acceptance suite: runs the quantitative checks that gate the artifact and
// prints one pass/fail line per criterion.
//
//   crossdiff_acceptance      runs all criteria
//   crossdiff_acceptance N    runs criterion N only
//
// Exit status is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crossdiff/exact_solutions.hpp"
#include "crossdiff/experiment.hpp"
#include "crossdiff/fem.hpp"
#include "crossdiff/ode.hpp"
#include "crossdiff/solver_pb.hpp"
#include "crossdiff/solver_pdelta.hpp"

using namespace crossdiff;

namespace {

constexpr double kInvasionT = 44.0;
constexpr double kInvasionTau = 1e-3;
constexpr double kBarenblattT = 0.15;
constexpr double kBarenblattTau = 1e-4;

SchemeParams scheme_params(double tau, double delta, double t_end) {
    SchemeParams p;
    p.tau = tau;
    p.delta = delta;
    p.eps = Epsilon{1e-10};
    p.tol = 1e-8;
    p.max_inner = 100;
    p.t_end = t_end;
    return p;
}

LotkaVolterraParams invasion_lv() {
    return LotkaVolterraParams::differentiated(1.0, 1.0, 1.0, 1.0, 2.0, 2.0);
}

double mesh_h(int nodes) {
    return 4.0 / static_cast<double>(nodes - 1);
}

// Lazily computed benchmark-experiment runs, shared between criteria.
class Lab {
public:
    const PdeltaRunResult& invasion_pdelta(int nodes) {
        auto it = invasion_pdelta_.find(nodes);
        if (it == invasion_pdelta_.end()) {
            const auto mesh = make_uniform_mesh(-2.0, 2.0, nodes);
            const auto [u10, u20] = invasion_initial(mesh);
            const double h = mesh_h(nodes);
            it = invasion_pdelta_
                     .emplace(nodes, pdelta_run(u10, u20,
                                                scheme_params(kInvasionTau, h * h, kInvasionT),
                                                invasion_lv(), DriftField{}, {}))
                     .first;
        }
        return it->second;
    }

    const PbRunResult& invasion_pb(int nodes) {
        auto it = invasion_pb_.find(nodes);
        if (it == invasion_pb_.end()) {
            const auto mesh = make_uniform_mesh(-2.0, 2.0, nodes);
            const auto [u10, u20] = invasion_initial(mesh);
            const auto u0 = add(u10, u20);
            std::vector<double> r(mesh->node_count());
            for (std::size_t i = 0; i < r.size(); ++i) {
                r[i] = u10[i] / u0[i];
            }
            const double h = mesh_h(nodes);
            it = invasion_pb_
                     .emplace(nodes,
                              pb_run(u0, NodalField(mesh, std::move(r)),
                                     scheme_params(kInvasionTau, 2.0 * h * h, kInvasionT),
                                     invasion_lv(), DriftField{}, {}))
                     .first;
        }
        return it->second;
    }

    const PdeltaRunResult& barenblatt_pdelta(int nodes) {
        auto it = barenblatt_pdelta_.find(nodes);
        if (it == barenblatt_pdelta_.end()) {
            const auto mesh = make_uniform_mesh(-2.0, 2.0, nodes);
            const auto init = contact_inhibition_initial(mesh, bp_);
            const double h = mesh_h(nodes);
            const BarenblattParams bp = bp_;
            it = barenblatt_pdelta_
                     .emplace(nodes,
                              pdelta_run(init.u1, init.u2,
                                         scheme_params(kBarenblattTau, h * h, kBarenblattT),
                                         LotkaVolterraParams::none(), DriftField{}, {},
                                         [bp](double t, double x) {
                                             return barenblatt(t, x, bp);
                                         }))
                     .first;
        }
        return it->second;
    }

    const PbRunResult& barenblatt_pb(int nodes) {
        auto it = barenblatt_pb_.find(nodes);
        if (it == barenblatt_pb_.end()) {
            const auto mesh = make_uniform_mesh(-2.0, 2.0, nodes);
            const auto init = contact_inhibition_initial(mesh, bp_);
            const double h = mesh_h(nodes);
            const BarenblattParams bp = bp_;
            it = barenblatt_pb_
                     .emplace(nodes,
                              pb_run(add(init.u1, init.u2), init.r,
                                     scheme_params(kBarenblattTau, 2.0 * h * h, kBarenblattT),
                                     LotkaVolterraParams::none(), DriftField{}, {},
                                     TransportForm::Chi,
                                     [bp](double t, double x) {
                                         return barenblatt(t, x, bp);
                                     }))
                     .first;
        }
        return it->second;
    }

    const BarenblattParams& barenblatt_params() const { return bp_; }

private:
    BarenblattParams bp_{};
    std::map<int, PdeltaRunResult> invasion_pdelta_;
    std::map<int, PbRunResult> invasion_pb_;
    std::map<int, PdeltaRunResult> barenblatt_pdelta_;
    std::map<int, PbRunResult> barenblatt_pb_;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double time_average_osc(const std::vector<DiagnosticsRecord>& records) {
    double sum = 0.0;
    for (const auto& rec : records) {
        sum += rec.osc_u;
    }
    return sum / static_cast<double>(records.size());
}

double trapezoid(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double sum = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n; ++i) {
        sum += f(a + i * h);
    }
    return sum * h;
}

double logistic_exact(double alpha, double beta, double u0, double t) {
    const double e = std::exp(alpha * t);
    return alpha * u0 * e / (alpha + beta * u0 * (e - 1.0));
}

// --- criteria -------------------------------------------------------------

bool criterion_barenblatt_oracle(Lab& lab, std::ostream& out) {
    const auto& bp = lab.barenblatt_params();
    const double expected = 8.0 / 3.0 * std::sqrt(12.0);
    double worst_mass = 0.0;
    for (double t : {0.0, 0.05, 0.10, 0.15}) {
        const double mass = trapezoid(
            [&](double x) { return barenblatt(t, x, bp); }, -2.0, 2.0, 10000);
        worst_mass = std::max(worst_mass, std::abs(mass - expected) / expected);
    }

    const double s = 1e-5;
    double worst_residual = 0.0;
    for (double t : {0.05, 0.10, 0.15}) {
        for (double frac : {0.0, 0.3, 0.6}) {
            const double x = frac * support_radius(t, bp);
            const double ut =
                (barenblatt(t + s, x, bp) - barenblatt(t - s, x, bp)) / (2.0 * s);
            const auto half_sq = [&](double xx) {
                const double v = barenblatt(t, xx, bp);
                return 0.5 * v * v;
            };
            const double flux =
                (half_sq(x + s) - 2.0 * half_sq(x) + half_sq(x - s)) / (s * s);
            worst_residual = std::max(worst_residual, std::abs(ut - flux));
        }
    }
    out << "mass rel err " << fmt(worst_mass) << " (tol 1e-4), pde residual "
        << fmt(worst_residual) << " (tol 1e-4)";
    return worst_mass <= 1e-4 && worst_residual <= 1e-4;
}

bool criterion_mesh_convergence(Lab& lab, std::ostream& out) {
    const std::vector<int> nodes{101, 301, 501};
    std::vector<double> err_pdelta, err_pb;
    for (int n : nodes) {
        err_pdelta.push_back(*lab.barenblatt_pdelta(n).diagnostics.back().rel_l2_error);
        err_pb.push_back(*lab.barenblatt_pb(n).diagnostics.back().rel_l2_error);
    }
    const bool pdelta_ok = err_pdelta[0] > err_pdelta[1] && err_pdelta[1] > err_pdelta[2];
    const bool pb_ok = err_pb[0] > err_pb[1] && err_pb[1] > err_pb[2];
    out << "pdelta " << fmt(err_pdelta[0]) << " > " << fmt(err_pdelta[1]) << " > "
        << fmt(err_pdelta[2]) << (pdelta_ok ? "" : " VIOLATED") << "; pb " << fmt(err_pb[0])
        << " > " << fmt(err_pb[1]) << " > " << fmt(err_pb[2]) << (pb_ok ? "" : " VIOLATED");
    return pdelta_ok && pb_ok;
}

bool criterion_oscillation_ordering(Lab& lab, std::ostream& out) {
    bool ok = true;
    std::ostringstream detail;
    const auto check_experiment = [&](const char* name,
                                      const std::vector<DiagnosticsRecord>& pdelta,
                                      const std::vector<DiagnosticsRecord>& pb) {
        const double avg_pdelta = time_average_osc(pdelta);
        const double avg_pb = time_average_osc(pb);
        const std::size_t tenth = (pdelta.size() - 1) / 10;
        const double osc_early = pdelta[tenth].osc_u;
        const double osc_final = pdelta.back().osc_u;
        const bool ordering = avg_pb > avg_pdelta;
        const bool attenuation = osc_final <= osc_early;
        detail << name << ": avg pb " << fmt(avg_pb) << " vs pdelta " << fmt(avg_pdelta)
               << (ordering ? "" : " VIOLATED") << ", pdelta osc(T) " << fmt(osc_final)
               << " vs osc(T/10) " << fmt(osc_early) << (attenuation ? "" : " VIOLATED")
               << "; ";
        ok = ok && ordering && attenuation;
    };
    check_experiment("invasion", lab.invasion_pdelta(101).diagnostics,
                     lab.invasion_pb(101).diagnostics);
    check_experiment("barenblatt", lab.barenblatt_pdelta(101).diagnostics,
                     lab.barenblatt_pb(101).diagnostics);
    out << detail.str();
    return ok;
}

bool criterion_fixed_point(Lab& lab, std::ostream& out) {
    const int a = lab.invasion_pdelta(101).max_inner_iterations;
    const int b = lab.invasion_pb(101).max_inner_iterations;
    const int c = lab.barenblatt_pdelta(101).max_inner_iterations;
    const int d = lab.barenblatt_pb(101).max_inner_iterations;
    const int worst = std::max(std::max(a, b), std::max(c, d));
    out << "max inner iterations " << worst << " (limit < 10, hard cap 100)";
    return worst < 10;
}

bool criterion_conservation(Lab& lab, std::ostream& out) {
    // The segregated benchmark runs with zero reactions and zero drift.
    const auto& pdelta = lab.barenblatt_pdelta(101).diagnostics;
    const double m1 = pdelta.front().mass_u1;
    const double m2 = pdelta.front().mass_u2;
    double drift_pdelta = 0.0;
    for (const auto& rec : pdelta) {
        drift_pdelta = std::max(drift_pdelta, std::abs(rec.mass_u1 - m1) / m1);
        drift_pdelta = std::max(drift_pdelta, std::abs(rec.mass_u2 - m2) / m2);
    }
    const auto& pb = lab.barenblatt_pb(101).diagnostics;
    const double total0 = pb.front().mass_u1 + pb.front().mass_u2;
    double drift_pb = 0.0;
    for (const auto& rec : pb) {
        drift_pb = std::max(drift_pb,
                            std::abs(rec.mass_u1 + rec.mass_u2 - total0) / total0);
    }
    out << "pdelta species drift " << fmt(drift_pdelta) << ", pb total drift "
        << fmt(drift_pb) << " (tol 1e-8)";
    return drift_pdelta <= 1e-8 && drift_pb <= 1e-8;
}

bool criterion_positivity(Lab& lab, std::ostream& out) {
    const double floor = -1e-6;
    const double invasion_species =
        std::min(lab.invasion_pdelta(101).min_u1, lab.invasion_pdelta(101).min_u2);
    const double barenblatt_species =
        std::min(lab.barenblatt_pdelta(101).min_u1, lab.barenblatt_pdelta(101).min_u2);
    const double min_total =
        std::min(lab.invasion_pb(101).min_u, lab.barenblatt_pb(101).min_u);

    // Discrete analogue of the exponential total-density envelope with
    // lambda = max alpha_i = 1 on the invasion run.
    const double lo = 0.449 * std::exp(-kInvasionT);
    const double hi = 0.451 * std::exp(kInvasionT);
    double env_min = 1e300, env_max = -1e300;
    for (const auto* records :
         {&lab.invasion_pdelta(101).diagnostics, &lab.invasion_pb(101).diagnostics}) {
        for (const auto& rec : *records) {
            env_min = std::min(env_min, rec.min_u);
            env_max = std::max(env_max, rec.max_u);
        }
    }
    const bool envelope_ok = env_min >= lo && env_max <= hi;
    out << "species floor -1e-6: invasion pdelta " << fmt(invasion_species)
        << (invasion_species >= floor ? "" : " VIOLATED") << ", segregated pdelta "
        << fmt(barenblatt_species) << (barenblatt_species >= floor ? "" : " VIOLATED")
        << ", pb total " << fmt(min_total) << (min_total >= floor ? "" : " VIOLATED")
        << "; invasion envelope [" << fmt(env_min) << ", " << fmt(env_max) << "] within ["
        << fmt(lo) << ", " << fmt(hi) << "]" << (envelope_ok ? "" : " VIOLATED");
    return invasion_species >= floor && barenblatt_species >= floor &&
           min_total >= floor && envelope_ok;
}

bool criterion_ode_suite(Lab&, std::ostream& out) {
    const auto logistic = simulate_logistic(1.0, 1.0, 0.5, 1.0, 1e-3);
    const double logistic_err =
        std::abs(logistic.value.back() - logistic_exact(1.0, 1.0, 0.5, 1.0));

    SplitScenario s;
    s.alpha_pre = 1.0;
    s.beta_pre = 1.0;
    s.u0 = 0.1;
    s.t_star = 1.0;
    s.theta = 0.3;
    s.post = LotkaVolterraParams::non_differentiated(1.0, 1.0);
    s.t_end = 2.0;
    const auto split = simulate_split(s, 1e-3);
    const auto continued = simulate_logistic(1.0, 1.0, 0.1, 2.0, 1e-3);
    double split_err = 0.0;
    for (std::size_t i = 0; i < split.time.size(); ++i) {
        split_err = std::max(split_err,
                             std::abs(split.u1[i] + split.u2[i] - continued.value[i]));
    }

    const auto set = equilibria(LotkaVolterraParams::differentiated(1, 1, 1, 1, 2, 2));
    const bool equilibria_ok =
        !set.has_continuum && set.degenerate_interior && set.points.size() == 3 &&
        set.points[0][0] == 0.0 && set.points[0][1] == 0.0 && set.points[1][0] == 1.0 &&
        set.points[1][1] == 0.0 && set.points[2][0] == 0.0 && set.points[2][1] == 0.5;

    out << "logistic err " << fmt(logistic_err) << " (tol 1e-8), nd split err "
        << fmt(split_err) << " (tol 1e-6), equilibria "
        << (equilibria_ok ? "exact" : "WRONG");
    return logistic_err <= 1e-8 && split_err <= 1e-6 && equilibria_ok;
}

bool criterion_scheme_identities(Lab& lab, std::ostream& out) {
    // (P)_B reconstruction u1 + u2 = u at the nodes, checked per step.
    const auto mesh = make_uniform_mesh(-2.0, 2.0, 101);
    const auto init = contact_inhibition_initial(mesh, lab.barenblatt_params());
    const double h = mesh_h(101);
    const auto pb_params = scheme_params(kBarenblattTau, 2.0 * h * h, kBarenblattT);
    PbState pb_state{add(init.u1, init.u2), init.r, 0.0};
    double reconstruction_err = 0.0;
    for (int n = 0; n < 100; ++n) {
        const auto step = pb_step(pb_state, pb_params, LotkaVolterraParams::none(),
                                  DriftField{}, TransportForm::Chi);
        pb_state = PbState{step.u, step.r, pb_state.time + pb_params.tau};
        const auto [u1, u2] = reconstruct_species(pb_state.u, pb_state.r);
        for (std::size_t i = 0; i < mesh->node_count(); ++i) {
            reconstruction_err =
                std::max(reconstruction_err, std::abs(u1[i] + u2[i] - pb_state.u[i]));
        }
    }

    // Summing the two coupled equations must reproduce the single-density
    // scheme in non-differentiated mode; assembled independently here.
    const auto [u10, u20] = invasion_initial(mesh);
    const auto nd = LotkaVolterraParams::non_differentiated(1.0, 1.0);
    const auto pd_params = scheme_params(kInvasionTau, h * h, kInvasionT);
    const auto w = mesh->lumped_weights();
    PdeltaState state{u10, u20, 0.0};
    double summed_residual = 0.0;
    for (int n = 0; n < 100; ++n) {
        const auto step = pdelta_step(state, pd_params, nd, DriftField{});
        const auto w1 = midpoint_truncation(step.lin_u1, pd_params.eps);
        const auto w2 = midpoint_truncation(step.lin_u2, pd_params.eps);
        std::vector<double> wsum(w1.size());
        for (std::size_t j = 0; j < wsum.size(); ++j) {
            wsum[j] = w1[j] + w2[j];
        }
        const auto S = assemble_weighted_stiffness(wsum, *mesh);
        const auto u_new = add(step.u1, step.u2);
        const auto stiff = S.apply(u_new.values());
        for (std::size_t l = 0; l < mesh->node_count(); ++l) {
            const double freeze =
                (truncate(step.lin_u1[l], pd_params.eps) +
                 truncate(step.lin_u2[l], pd_params.eps)) *
                (truncate(state.u1[l], pd_params.eps) + truncate(state.u2[l], pd_params.eps));
            const double rhs = w[l] * (nd.alpha[0] * u_new[l] - nd.beta[0][0] * freeze);
            const double lhs =
                w[l] / pd_params.tau * (u_new[l] - (state.u1[l] + state.u2[l])) +
                (1.0 + pd_params.delta) * stiff[l];
            summed_residual = std::max(summed_residual, std::abs(lhs - rhs));
        }
        state = PdeltaState{step.u1, step.u2, state.time + pd_params.tau};
    }

    out << "reconstruction err " << fmt(reconstruction_err)
        << " (tol 1e-12), nd summed residual " << fmt(summed_residual) << " (tol 1e-10)";
    return reconstruction_err <= 1e-12 && summed_residual <= 1e-10;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(Lab&, std::ostream&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {1, "Barenblatt oracle (mass and interior residual)", criterion_barenblatt_oracle},
        {2, "mesh convergence of the final-time relative L2 error",
         criterion_mesh_convergence},
        {3, "oscillation ordering and attenuation", criterion_oscillation_ordering},
        {4, "fixed-point termination in under ten iterations", criterion_fixed_point},
        {5, "discrete mass conservation without reactions", criterion_conservation},
        {6, "positivity and total-density envelope", criterion_positivity},
        {7, "ode suite (logistic oracle, nd split sum, equilibria)", criterion_ode_suite},
        {8, "scheme identities (reconstruction, nd summed system)",
         criterion_scheme_identities},
    };
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    if (argc > 1) {
        selected = std::atoi(argv[1]);
        if (selected < 1 || selected > static_cast<int>(criteria().size())) {
            std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], criteria().size());
            return 64;
        }
    }
    Lab lab;
    int failures = 0;
    for (const auto& criterion : criteria()) {
        if (selected != 0 && criterion.id != selected) {
            continue;
        }
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = criterion.run(lab, detail);
        } catch (const std::exception& e) {
            detail << "exception: " << e.what();
        }
        std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name, detail.str().c_str());
        std::fflush(stdout);
        if (!ok) {
            ++failures;
        }
    }
    return failures;
}
