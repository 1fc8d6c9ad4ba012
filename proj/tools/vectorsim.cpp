#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vectorsim/analysis.hpp"
#include "vectorsim/io.hpp"
#include "vectorsim/scenario.hpp"

namespace {

using namespace vectorsim;

const char* verdict_name(ControlledVerdict::Kind k) {
    switch (k) {
        case ControlledVerdict::Kind::PeriodicPersistence: return "PeriodicPersistence";
        case ControlledVerdict::Kind::Extinction: return "Extinction";
        case ControlledVerdict::Kind::Indeterminate: return "Indeterminate";
    }
    return "?";
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
    ScenarioConfig config = load_config(config_path);
    write_run_outputs(config, out_dir);
    std::cout << "wrote outputs for '" << config.label << "' to " << out_dir << "\n";
    return 0;
}

int cmd_preset(const std::string& name, const std::string& out_dir) {
    write_preset_outputs(parse_preset_name(name), out_dir);
    std::cout << "wrote preset " << name << " outputs to " << out_dir << "\n";
    return 0;
}

int cmd_classify(const std::string& config_path) {
    ScenarioConfig config = load_config(config_path);
    if (!config.schedule.local)
        throw std::invalid_argument("classify: config has no local control schedule");
    if (config.capacity.r_K <= 0.0)
        throw std::invalid_argument("classify: requires capacity.r_K > 0");
    const double tau = config.schedule.local->tau;

    double gamma_H0;
    double H0 = 0.0;
    if (config.mode.kind == BehaviorMode::Kind::Frozen) {
        gamma_H0 = config.mode.frozen_gamma;
    } else {
        // Empirical limit of the participation rate: mean over the last five
        // control days of the run.
        const Trajectory traj = simulate(config);
        const auto& log = traj.impulse_log;
        if (log.size() < 5)
            throw std::invalid_argument("classify: needs at least 5 control days");
        for (std::size_t i = log.size() - 5; i < log.size(); ++i) H0 += log[i].H;
        H0 /= 5.0;
        gamma_H0 = efficacy(H0, config.efficacy);
    }

    const ControlledVerdict v =
        classify_controlled(config.bio, gamma_H0, config.capacity.r_K, tau);
    std::cout << "verdict: " << verdict_name(v.kind) << "\n"
              << "gamma_H0: " << format_double(gamma_H0) << "\n";
    if (config.mode.kind != BehaviorMode::Kind::Frozen)
        std::cout << "H0: " << format_double(H0) << "\n";
    std::cout << "C: " << format_double(v.C) << "\n"
              << "offspring_number: " << format_double(v.lhs) << "\n"
              << "rhs_persist: " << format_double(v.rhs_persist) << "\n"
              << "rhs_extinct: " << format_double(v.rhs_extinct) << "\n"
              << "rhs_extinct_damped: " << format_double(v.rhs_extinct_damped) << "\n";
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& axis_spec,
              const std::string& out_dir) {
    write_sweep_outputs(config_path, parse_sweep_axis(axis_spec), out_dir);
    std::cout << "wrote sweep outputs to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mosquito population / household behavior scenario simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", preset_name, axis_spec;

    auto* run = app.add_subcommand("run", "Run one scenario config with its counterfactual");
    run->add_option("--config", config_path, "JSON scenario file")->required();
    run->add_option("--out", out_dir, "Output directory");

    auto* preset = app.add_subcommand("preset", "Run a named scenario preset grid");
    preset->add_option("name", preset_name, "Baseline, S1, S2, S3 or S4")->required();
    preset->add_option("--out", out_dir, "Output directory");

    auto* classify = app.add_subcommand("classify",
                                        "Closed-form persistence/extinction verdict");
    classify->add_option("--config", config_path, "JSON scenario file")->required();

    auto* sweep = app.add_subcommand("sweep", "Sweep one config field over values");
    sweep->add_option("--config", config_path, "JSON scenario file")->required();
    sweep->add_option("--axis", axis_spec, "Dotted path and values, e.g. behavior.u_c=0.3,0.6,0.9")
        ->required();
    sweep->add_option("--out", out_dir, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, out_dir);
        if (preset->parsed()) return cmd_preset(preset_name, out_dir);
        if (classify->parsed()) return cmd_classify(config_path);
        if (sweep->parsed()) return cmd_sweep(config_path, axis_spec, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
