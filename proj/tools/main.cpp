// Command-line front end: `crossdiff pde` reproduces the cross-diffusion
// experiments with either regularization scheme, `crossdiff ode` integrates
// the splitting models.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "crossdiff/experiment.hpp"
#include "crossdiff/version.hpp"

namespace {

int run_pde(const crossdiff::ExperimentConfig& config) {
    const auto outcome = crossdiff::run_experiment(config);
    for (const auto& run : outcome.runs) {
        if (run.ok) {
            std::cout << run.name << ": ok\n";
        } else {
            std::cerr << run.name << ": FAILED (" << run.error << ")\n";
        }
    }
    return outcome.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D cross-diffusion simulation laboratory for two competing "
                 "populations"};
    app.set_version_flag("--version", std::string("crossdiff ") + crossdiff::kVersion);
    app.require_subcommand(1);

    // --- pde ---------------------------------------------------------------
    crossdiff::ExperimentConfig config;
    config.mesh_nodes.clear();
    auto* pde = app.add_subcommand("pde", "Run a PDE experiment over mesh sweeps");

    const std::map<std::string, crossdiff::ExperimentKind> experiment_names{
        {"invasion", crossdiff::ExperimentKind::Invasion},
        {"barenblatt", crossdiff::ExperimentKind::Barenblatt},
        {"custom", crossdiff::ExperimentKind::Custom}};
    const std::map<std::string, crossdiff::SchemeChoice> scheme_names{
        {"pdelta", crossdiff::SchemeChoice::Pdelta},
        {"pb", crossdiff::SchemeChoice::Pb},
        {"both", crossdiff::SchemeChoice::Both}};
    const std::map<std::string, crossdiff::TransportForm> transport_names{
        {"chi", crossdiff::TransportForm::Chi},
        {"grad-chi", crossdiff::TransportForm::GradChi}};

    pde->add_option("--experiment", config.experiment, "invasion | barenblatt | custom")
        ->transform(CLI::CheckedTransformer(experiment_names, CLI::ignore_case));
    pde->add_option("--scheme", config.scheme, "pdelta | pb | both")
        ->transform(CLI::CheckedTransformer(scheme_names, CLI::ignore_case));
    pde->add_option("--nodes", config.mesh_nodes,
                    "Node count; repeatable (default 101 301 501)");
    double tau = 0.0, t_end = -1.0, delta = -1.0, delta_b = -1.0;
    auto* tau_opt = pde->add_option("--tau", tau, "Time step (default per experiment)");
    auto* t_opt = pde->add_option("--T", t_end, "Final time (default per experiment)");
    auto* delta_opt = pde->add_option("--delta", delta, "Viscosity weight (default h^2)");
    auto* delta_b_opt =
        pde->add_option("--delta-b", delta_b, "Fraction diffusion (default 2h^2)");
    pde->add_option("--eps", config.eps, "Coefficient truncation parameter");
    pde->add_option("--tol", config.tol, "Fixed-point stopping tolerance");
    pde->add_option("--snapshots", config.snapshot_times,
                    "Snapshot times; repeatable (default 0 T/4 T/2 3T/4 T)");
    pde->add_option("--out", config.output_dir, "Output directory");
    pde->add_option("--transport-form", config.transport_form,
                    "Pairing of the fraction transport term: chi | grad-chi")
        ->transform(CLI::CheckedTransformer(transport_names, CLI::ignore_case));

    // --- ode ---------------------------------------------------------------
    crossdiff::OdeConfig ode;
    auto* ode_cmd = app.add_subcommand("ode", "Integrate the splitting ODE models");
    const std::map<std::string, crossdiff::OdeConfig::Model> model_names{
        {"logistic", crossdiff::OdeConfig::Model::Logistic},
        {"split", crossdiff::OdeConfig::Model::Split}};
    ode_cmd->add_option("--model", ode.model, "logistic | split")
        ->transform(CLI::CheckedTransformer(model_names, CLI::ignore_case));
    ode_cmd->add_option("--alpha", ode.alpha, "Logistic / pre-split growth rate");
    ode_cmd->add_option("--beta", ode.beta, "Logistic / pre-split competition");
    ode_cmd->add_option("--u0", ode.u0, "Initial population");
    ode_cmd->add_option("--dt", ode.dt, "Integrator step");
    ode_cmd->add_option("--t-end", ode.t_end, "Final time");
    ode_cmd->add_option("--t-star", ode.t_star, "Split time (split model)");
    ode_cmd->add_option("--theta", ode.theta, "Species-1 share at the split");
    std::string mode = "nd";
    double post_alpha1 = 1.0, post_alpha2 = 1.0;
    double post_beta11 = 1.0, post_beta12 = 1.0, post_beta21 = 1.0, post_beta22 = 1.0;
    ode_cmd->add_option("--mode", mode, "Post-split coefficients: nd | d");
    ode_cmd->add_option("--alpha1", post_alpha1, "Post-split growth, species 1 (d mode)");
    ode_cmd->add_option("--alpha2", post_alpha2, "Post-split growth, species 2 (d mode)");
    ode_cmd->add_option("--beta11", post_beta11, "Post-split competition (d mode)");
    ode_cmd->add_option("--beta12", post_beta12, "Post-split competition (d mode)");
    ode_cmd->add_option("--beta21", post_beta21, "Post-split competition (d mode)");
    ode_cmd->add_option("--beta22", post_beta22, "Post-split competition (d mode)");
    ode_cmd->add_option("--out", ode.output_path, "Output CSV path");
    bool print_equilibria = false;
    ode_cmd->add_flag("--print-equilibria", print_equilibria,
                      "Print the post-split equilibrium set");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pde->parsed()) {
            if (config.mesh_nodes.empty()) {
                config.mesh_nodes = {101, 301, 501};
            }
            if (!tau_opt->empty()) config.tau = tau;
            if (!t_opt->empty()) config.t_end = t_end;
            if (!delta_opt->empty()) config.delta = delta;
            if (!delta_b_opt->empty()) config.delta_b = delta_b;
            return run_pde(config);
        }
        if (mode == "nd") {
            // Splitting without differentiation keeps the pre-split law.
            ode.post = crossdiff::LotkaVolterraParams::non_differentiated(ode.alpha, ode.beta);
        } else if (mode == "d") {
            ode.post = crossdiff::LotkaVolterraParams::differentiated(
                post_alpha1, post_alpha2, post_beta11, post_beta12, post_beta21, post_beta22);
        } else {
            throw std::invalid_argument("--mode must be nd or d");
        }
        if (print_equilibria) {
            std::cout << crossdiff::describe(crossdiff::equilibria(ode.post));
        }
        crossdiff::run_ode(ode);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
