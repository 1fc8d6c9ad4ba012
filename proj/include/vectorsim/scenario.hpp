#ifndef VECTORSIM_SCENARIO_HPP
#define VECTORSIM_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "vectorsim/dynamics.hpp"

namespace vectorsim {

enum class PresetName { Baseline, S1, S2, S3, S4 };

PresetName parse_preset_name(const std::string& name);  // throws on unknown
std::string to_string(PresetName name);

// The preset grids:
//   Baseline: no local control, frozen gamma = 0, one 50% event at day 70
//   S1: u_c in {0.3, 0.6, 0.9} x kappa_1 in {0, 50, 100}
//   S2: bite tolerance shifted 3 -> {6, 9, 12} at the event (u_c=0.6, kappa_1=50)
//   S3: r_K shifted 0.05 -> 0.06 at the event
//   S4: both shifts of S2 (k -> 6) and S3 combined
std::vector<ScenarioConfig> preset_configs(PresetName name);

// Same run with the external events removed; everything else identical.
ScenarioConfig counterfactual_of(const ScenarioConfig& config);

struct PresetRun {
    std::string label;
    ScenarioConfig config;
    Trajectory with_intervention;
    Trajectory counterfactual;
};

std::vector<PresetRun> run_preset(PresetName name);

// Parses and validates a JSON scenario file. An optional "preset" field seeds
// the defaults; explicit fields override. Unknown keys are rejected with the
// offending key named.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const ScenarioConfig& config);

// First day (counted from the event day, daily samples) at which
// |A - A_cf|/A_cf stays below tol for 7 consecutive days; the event day
// itself counts, so identical trajectories give 0. Days on which the
// counterfactual holds fewer than one mosquito are treated as undefined and
// cannot qualify. The event day is the first logged impulse with s_e = 1.
// nullopt when no such window exists; throws on mismatched time grids.
std::optional<double> report_recovery_time(const Trajectory& traj,
                                           const Trajectory& counterfactual,
                                           double tol);

struct SummaryRow {
    std::string label;
    std::optional<OrbitSummary> orbit;     // with-intervention run
    std::optional<OrbitSummary> cf_orbit;  // counterfactual run
    std::optional<double> recovery_days;
    std::optional<double> final_H;
    std::optional<double> cf_final_H;
};

SummaryRow summarize(const std::string& label, const ScenarioConfig& config,
                     const Trajectory& with_run, const Trajectory& cf_run);

// Runs every grid cell of a preset (or a swept config), writes per-label
// trajectory/impulse CSVs, an SVG plot per pair and one summary.csv.
void write_preset_outputs(PresetName name, const std::string& out_dir);

struct SweepAxis {
    std::string path;            // dotted JSON path, e.g. "behavior.u_c"
    std::vector<double> values;
};

SweepAxis parse_sweep_axis(const std::string& arg);  // "behavior.u_c=0.3,0.6"

void write_sweep_outputs(const std::string& config_path, const SweepAxis& axis,
                         const std::string& out_dir);

void write_run_outputs(const ScenarioConfig& config, const std::string& out_dir);

}  // namespace vectorsim

#endif
