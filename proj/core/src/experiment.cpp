#include "crossdiff/experiment.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "crossdiff/errors.hpp"
#include "crossdiff/exact_solutions.hpp"
#include "crossdiff/fem.hpp"
#include "crossdiff/solver_pdelta.hpp"
#include "crossdiff/version.hpp"

namespace crossdiff {

namespace {

using nlohmann::json;

// 17 significant digits round-trip 64-bit floats exactly, which keeps the
// CSV output byte-identical across runs.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string experiment_token(ExperimentKind e) {
    switch (e) {
        case ExperimentKind::Invasion: return "invasion";
        case ExperimentKind::Barenblatt: return "barenblatt";
        case ExperimentKind::Custom: return "custom";
    }
    throw std::logic_error("unknown experiment");
}

struct ResolvedRun {
    ExperimentKind experiment;
    std::string scheme;  // "pdelta" | "pb"
    int nodes = 0;
    double h = 0.0;
    double domain_left = 0.0;
    double domain_right = 0.0;
    SchemeParams params;
    std::string delta_rule;
    LotkaVolterraParams lv;
    TransportForm transport_form = TransportForm::Chi;
    std::vector<double> snapshot_times;
    std::optional<BarenblattParams> exact;  // barenblatt experiment only
    std::string base_path;                  // output path prefix, no extension
};

double default_t_end(ExperimentKind e) {
    switch (e) {
        case ExperimentKind::Barenblatt:
            return 0.15;
        case ExperimentKind::Invasion:
            // The invasion fronts are well inside the domain by t = 20 and
            // every run of the default mesh sweep stays clear of the
            // late-extinction regime where the viscosity scheme's frozen
            // competition term amplifies negative species tails.
            return 20.0;
        case ExperimentKind::Custom:
            return 1.0;
    }
    throw std::logic_error("unknown experiment");
}

void validate_config(const ExperimentConfig& c) {
    if (c.mesh_nodes.empty()) {
        throw std::invalid_argument("experiment: at least one node count required");
    }
    for (int n : c.mesh_nodes) {
        if (n < 3) {
            throw std::invalid_argument("experiment: node counts must be at least 3");
        }
    }
    if (c.tau && !(*c.tau > 0.0)) {
        throw std::invalid_argument("experiment: tau must be positive");
    }
    if (c.t_end && !(*c.t_end >= 0.0)) {
        throw std::invalid_argument("experiment: T must be nonnegative");
    }
    if (c.delta && !(*c.delta >= 0.0)) {
        throw std::invalid_argument("experiment: delta must be nonnegative");
    }
    if (c.delta_b && !(*c.delta_b >= 0.0)) {
        throw std::invalid_argument("experiment: delta-b must be nonnegative");
    }
    Epsilon check_eps{c.eps};  // throws outside (0, 1)
    (void)check_eps;
    if (!(c.tol > 0.0)) {
        throw std::invalid_argument("experiment: tol must be positive");
    }
    if (c.max_inner < 1) {
        throw std::invalid_argument("experiment: max-inner must be at least 1");
    }
    const double T = c.t_end.value_or(default_t_end(c.experiment));
    for (double t : c.snapshot_times) {
        if (t < 0.0 || t > T) {
            throw std::invalid_argument("experiment: snapshot times must lie in [0, T]");
        }
    }
}

std::vector<ResolvedRun> resolve_runs(const ExperimentConfig& c) {
    const bool barenblatt = c.experiment == ExperimentKind::Barenblatt;
    const double tau = c.tau.value_or(barenblatt ? 1e-4 : 1e-3);
    const double T = c.t_end.value_or(default_t_end(c.experiment));
    std::vector<double> snaps = c.snapshot_times;
    if (snaps.empty()) {
        snaps = {0.0, 0.25 * T, 0.5 * T, 0.75 * T, T};
    }

    std::vector<std::string> schemes;
    if (c.scheme == SchemeChoice::Pdelta || c.scheme == SchemeChoice::Both) {
        schemes.push_back("pdelta");
    }
    if (c.scheme == SchemeChoice::Pb || c.scheme == SchemeChoice::Both) {
        schemes.push_back("pb");
    }

    std::vector<ResolvedRun> runs;
    for (const auto& scheme : schemes) {
        for (int nodes : c.mesh_nodes) {
            ResolvedRun run;
            run.experiment = c.experiment;
            run.scheme = scheme;
            run.nodes = nodes;
            run.domain_left = -2.0;
            run.domain_right = 2.0;
            run.h = (run.domain_right - run.domain_left) / static_cast<double>(nodes - 1);
            run.params.tau = tau;
            run.params.t_end = T;
            run.params.eps = Epsilon{c.eps};
            run.params.tol = c.tol;
            run.params.max_inner = c.max_inner;
            if (scheme == "pdelta") {
                run.params.delta = c.delta.value_or(run.h * run.h);
                run.delta_rule = c.delta ? "explicit" : "h^2";
            } else {
                run.params.delta = c.delta_b.value_or(2.0 * run.h * run.h);
                run.delta_rule = c.delta_b ? "explicit" : "2h^2";
            }
            switch (c.experiment) {
                case ExperimentKind::Invasion:
                    run.lv = LotkaVolterraParams::differentiated(1.0, 1.0, 1.0, 1.0, 2.0, 2.0);
                    break;
                case ExperimentKind::Barenblatt:
                    run.lv = LotkaVolterraParams::none();
                    run.exact = BarenblattParams{};
                    break;
                case ExperimentKind::Custom:
                    run.lv = LotkaVolterraParams::none();
                    break;
            }
            run.transport_form = c.transport_form;
            run.snapshot_times = snaps;
            run.base_path = (std::filesystem::path(c.output_dir) /
                             (experiment_token(c.experiment) + "_" + scheme + "_n" +
                              std::to_string(nodes)))
                                .string();
            runs.push_back(std::move(run));
        }
    }
    return runs;
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRecord>& records) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << "t,osc_u,mass_u1,mass_u2,min_u,max_u,rel_l2_err,inner_iters\n";
    for (const auto& rec : records) {
        out << fmt(rec.time) << ',' << fmt(rec.osc_u) << ',' << fmt(rec.mass_u1) << ','
            << fmt(rec.mass_u2) << ',' << fmt(rec.min_u) << ',' << fmt(rec.max_u) << ','
            << (rec.rel_l2_error ? fmt(*rec.rel_l2_error) : std::string{}) << ','
            << rec.inner_iterations << '\n';
    }
}

void write_snapshot_row(std::ofstream& out, double t, double x, double u1, double u2,
                        double u, const std::optional<double>& r) {
    out << fmt(t) << ',' << fmt(x) << ',' << fmt(u1) << ',' << fmt(u2) << ',' << fmt(u)
        << ',' << (r ? fmt(*r) : std::string{}) << '\n';
}

json base_manifest(const ResolvedRun& run) {
    json m;
    m["artifact_version"] = kVersion;
    m["experiment"] = experiment_token(run.experiment);
    m["scheme"] = run.scheme;
    m["nodes"] = run.nodes;
    m["h"] = run.h;
    m["domain_left"] = run.domain_left;
    m["domain_right"] = run.domain_right;
    m["tau"] = run.params.tau;
    m["t_end"] = run.params.t_end;
    m["steps"] = run.params.step_count();
    m["eps"] = run.params.eps.value();
    m["tol"] = run.params.tol;
    m["max_inner"] = run.params.max_inner;
    m[run.scheme == "pdelta" ? "delta" : "delta_b"] = run.params.delta;
    m["delta_rule"] = run.delta_rule;
    m["lv_mode"] = run.lv.is_zero() ? "none"
                   : run.lv.mode == CompetitionMode::NonDifferentiated ? "nd"
                                                                       : "d";
    m["alpha1"] = run.lv.alpha[0];
    m["alpha2"] = run.lv.alpha[1];
    m["beta11"] = run.lv.beta[0][0];
    m["beta12"] = run.lv.beta[0][1];
    m["beta21"] = run.lv.beta[1][0];
    m["beta22"] = run.lv.beta[1][1];
    m["drift"] = "zero";
    if (run.scheme == "pb") {
        m["transport_form"] = run.transport_form == TransportForm::Chi ? "chi" : "grad-chi";
    }
    if (run.exact) {
        m["x0"] = run.exact->x0;
        m["t_star"] = run.exact->t_star;
    }
    m["snapshot_times"] = run.snapshot_times;
    return m;
}

void write_manifest(const std::string& path, const json& m) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << m.dump(2) << '\n';
}

RunOutcome execute_run(const ResolvedRun& run) {
    RunOutcome outcome;
    outcome.name = std::filesystem::path(run.base_path).filename().string();

    const MeshPtr mesh =
        make_uniform_mesh(run.domain_left, run.domain_right, static_cast<std::size_t>(run.nodes));
    std::function<double(double, double)> exact_total;
    if (run.exact) {
        const BarenblattParams p = *run.exact;
        exact_total = [p](double t, double x) { return barenblatt(t, x, p); };
    }

    json manifest = base_manifest(run);
    const std::string snapshots_path = run.base_path + "_snapshots.csv";
    const std::string diagnostics_path = run.base_path + "_diagnostics.csv";
    manifest["snapshots_csv"] = std::filesystem::path(snapshots_path).filename().string();
    manifest["diagnostics_csv"] = std::filesystem::path(diagnostics_path).filename().string();

    try {
        std::ofstream snap_out(snapshots_path);
        if (!snap_out) {
            throw std::runtime_error("cannot open " + snapshots_path + " for writing");
        }
        snap_out << "t,x,u1,u2,u,r\n";

        if (run.scheme == "pdelta") {
            NodalField u10 = NodalField::zero(mesh);
            NodalField u20 = NodalField::zero(mesh);
            if (run.experiment == ExperimentKind::Barenblatt) {
                auto init = contact_inhibition_initial(mesh, *run.exact);
                u10 = std::move(init.u1);
                u20 = std::move(init.u2);
            } else {
                auto init = invasion_initial(mesh);
                u10 = std::move(init.first);
                u20 = std::move(init.second);
            }
            const auto result = pdelta_run(u10, u20, run.params, run.lv, DriftField{},
                                           run.snapshot_times, exact_total);
            for (const auto& s : result.snapshots) {
                for (std::size_t i = 0; i < mesh->node_count(); ++i) {
                    write_snapshot_row(snap_out, s.time, mesh->node(i), s.u1[i], s.u2[i],
                                       s.u1[i] + s.u2[i], std::nullopt);
                }
            }
            write_diagnostics_csv(diagnostics_path, result.diagnostics);
            manifest["min_u1"] = result.min_u1;
            manifest["min_u2"] = result.min_u2;
            manifest["max_inner_used"] = result.max_inner_iterations;
        } else {
            NodalField u0 = NodalField::zero(mesh);
            NodalField r0 = NodalField::zero(mesh);
            if (run.experiment == ExperimentKind::Barenblatt) {
                auto init = contact_inhibition_initial(mesh, *run.exact);
                u0 = add(init.u1, init.u2);
                r0 = std::move(init.r);
            } else {
                auto init = invasion_initial(mesh);
                u0 = add(init.first, init.second);
                std::vector<double> r(mesh->node_count());
                for (std::size_t i = 0; i < r.size(); ++i) {
                    r[i] = init.first[i] / u0[i];
                }
                r0 = NodalField(mesh, std::move(r));
            }
            const auto result = pb_run(u0, r0, run.params, run.lv, DriftField{},
                                       run.snapshot_times, run.transport_form, exact_total);
            for (const auto& s : result.snapshots) {
                const auto [u1, u2] = reconstruct_species(s.u, s.r);
                for (std::size_t i = 0; i < mesh->node_count(); ++i) {
                    write_snapshot_row(snap_out, s.time, mesh->node(i), u1[i], u2[i], s.u[i],
                                       s.r[i]);
                }
            }
            write_diagnostics_csv(diagnostics_path, result.diagnostics);
            manifest["min_u"] = result.min_u;
            manifest["min_r"] = result.min_r;
            manifest["max_r"] = result.max_r;
            manifest["fraction_band_ok"] = result.fraction_band_ok;
            manifest["max_inner_used"] = result.max_inner_iterations;
        }
        manifest["status"] = "ok";
        outcome.ok = true;
    } catch (const std::exception& e) {
        manifest["status"] = "failed";
        manifest["error"] = e.what();
        // Snapshot/diagnostics files may be missing or truncated for a
        // failed run; the manifest is the authoritative flag.
        manifest["outputs_complete"] = false;
        outcome.ok = false;
        outcome.error = e.what();
    }
    write_manifest(run.base_path + "_manifest.json", manifest);
    return outcome;
}

}  // namespace

bool ExperimentOutcome::all_ok() const {
    for (const auto& run : runs) {
        if (!run.ok) {
            return false;
        }
    }
    return true;
}

ExperimentOutcome run_experiment(const ExperimentConfig& config) {
    validate_config(config);
    std::filesystem::create_directories(config.output_dir);
    ExperimentOutcome outcome;
    for (const auto& run : resolve_runs(config)) {
        outcome.runs.push_back(execute_run(run));
    }
    return outcome;
}

void run_ode(const OdeConfig& config) {
    std::ofstream out(config.output_path);
    if (!out) {
        throw std::runtime_error("cannot open " + config.output_path + " for writing");
    }
    if (config.model == OdeConfig::Model::Logistic) {
        const auto series =
            simulate_logistic(config.alpha, config.beta, config.u0, config.t_end, config.dt);
        out << "t,U\n";
        for (std::size_t i = 0; i < series.time.size(); ++i) {
            out << fmt(series.time[i]) << ',' << fmt(series.value[i]) << '\n';
        }
        return;
    }
    SplitScenario scenario;
    scenario.alpha_pre = config.alpha;
    scenario.beta_pre = config.beta;
    scenario.u0 = config.u0;
    scenario.t_star = config.t_star;
    scenario.theta = config.theta;
    scenario.post = config.post;
    scenario.t_end = config.t_end;
    const auto series = simulate_split(scenario, config.dt);
    out << "t,U1,U2,U\n";
    for (std::size_t i = 0; i < series.time.size(); ++i) {
        out << fmt(series.time[i]) << ',' << fmt(series.u1[i]) << ',' << fmt(series.u2[i])
            << ',' << fmt(series.u1[i] + series.u2[i]) << '\n';
    }
}

std::string describe(const EquilibriumSet& set) {
    std::ostringstream out;
    if (set.has_continuum) {
        out << "continuum: U1 + U2 = " << fmt(set.continuum_level) << " (U1, U2 >= 0)\n";
    }
    for (const auto& p : set.points) {
        out << "point: (" << fmt(p[0]) << ", " << fmt(p[1]) << ")\n";
    }
    if (set.degenerate_interior) {
        out << "no interior equilibrium (singular competition matrix)\n";
    }
    return out.str();
}

}  // namespace crossdiff
