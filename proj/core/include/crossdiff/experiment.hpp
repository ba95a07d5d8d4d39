#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crossdiff/kinetics.hpp"
#include "crossdiff/ode.hpp"
#include "crossdiff/solver_pb.hpp"

namespace crossdiff {

enum class ExperimentKind {
    Invasion,    // Gaussian colony inside a resident population, competing species
    Barenblatt,  // segregated self-similar profile with a known exact solution
    Custom,      // invasion initial data with reactions and drift disabled
};

enum class SchemeChoice { Pdelta, Pb, Both };

/// Batch configuration: one run per (scheme, node count). Unset optionals
/// resolve to the experiment defaults; unset regularization weights resolve
/// to the mesh-scaled rule delta = h², delta_b = 2h². Fully deterministic:
/// identical configs produce byte-identical files.
struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Invasion;
    SchemeChoice scheme = SchemeChoice::Both;
    std::vector<int> mesh_nodes = {101, 301, 501};
    std::optional<double> tau;      // default 1e-3 (invasion/custom), 1e-4 (barenblatt)
    std::optional<double> t_end;    // default 1.0 (invasion/custom), 0.15 (barenblatt)
    std::optional<double> delta;    // default h²
    std::optional<double> delta_b;  // default 2h²
    double eps = 1e-10;
    double tol = 1e-8;
    int max_inner = 100;
    std::vector<double> snapshot_times;  // default {0, T/4, T/2, 3T/4, T}
    std::string output_dir = "out";
    TransportForm transport_form = TransportForm::Chi;
};

struct RunOutcome {
    std::string name;  // e.g. "invasion_pdelta_n101"
    bool ok = false;
    std::string error;
};

struct ExperimentOutcome {
    std::vector<RunOutcome> runs;
    bool all_ok() const;
};

/// Executes every (scheme, mesh) combination, writing per run a snapshots
/// CSV (t,x,u1,u2,u,r), a diagnostics CSV
/// (t,osc_u,mass_u1,mass_u2,min_u,max_u,rel_l2_err,inner_iters) and a JSON
/// manifest of all resolved parameters. Solver failures are caught per run
/// and flagged in the manifest; configuration errors throw
/// std::invalid_argument.
ExperimentOutcome run_experiment(const ExperimentConfig& config);

/// ODE driver configuration.
struct OdeConfig {
    enum class Model { Logistic, Split } model = Model::Logistic;
    double alpha = 1.0;  // logistic growth
    double beta = 1.0;   // logistic competition
    double u0 = 0.1;
    double dt = 1e-3;
    double t_end = 10.0;
    // Split model only.
    double t_star = 1.0;
    double theta = 0.5;
    LotkaVolterraParams post = LotkaVolterraParams::non_differentiated(1.0, 1.0);
    std::string output_path = "ode.csv";
};

/// Integrates the configured model and writes the CSV time series:
/// columns t,U for the logistic model, t,U1,U2,U for the split model.
void run_ode(const OdeConfig& config);

/// Human-readable equilibrium listing, e.g. for CLI output.
std::string describe(const EquilibriumSet& set);

}  // namespace crossdiff
