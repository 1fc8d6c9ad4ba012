#include "vectorsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "vectorsim/io.hpp"
#include "vectorsim/svg.hpp"

namespace vectorsim {

using nlohmann::json;

PresetName parse_preset_name(const std::string& name) {
    if (name == "Baseline") return PresetName::Baseline;
    if (name == "S1") return PresetName::S1;
    if (name == "S2") return PresetName::S2;
    if (name == "S3") return PresetName::S3;
    if (name == "S4") return PresetName::S4;
    throw std::invalid_argument("unknown preset '" + name +
                                "' (expected Baseline, S1, S2, S3 or S4)");
}

std::string to_string(PresetName name) {
    switch (name) {
        case PresetName::Baseline: return "Baseline";
        case PresetName::S1: return "S1";
        case PresetName::S2: return "S2";
        case PresetName::S3: return "S3";
        case PresetName::S4: return "S4";
    }
    return "?";
}

namespace {

// Common trunk of every scenario: weekly local control from day 0 plus the
// day-70 external intervention destroying an extra 50%.
ScenarioConfig scenario_base() {
    ScenarioConfig c;
    c.schedule.local = LocalControl{0.0, 7.0};
    c.schedule.external_events = {ExternalEvent{70.0, 0.5, {}}};
    return c;
}

std::string num_label(double v) {
    std::string s = format_double(v);
    return s;
}

}  // namespace

std::vector<ScenarioConfig> preset_configs(PresetName name) {
    std::vector<ScenarioConfig> out;
    switch (name) {
        case PresetName::Baseline: {
            ScenarioConfig c;
            c.label = "baseline";
            c.schedule.local.reset();
            c.schedule.external_events = {ExternalEvent{70.0, 0.5, {}}};
            c.mode = {BehaviorMode::Kind::Frozen, 0.0};
            out.push_back(c);
            break;
        }
        case PresetName::S1: {
            for (double uc : {0.3, 0.6, 0.9}) {
                for (double ke : {0.0, 50.0, 100.0}) {
                    ScenarioConfig c = scenario_base();
                    c.behavior.u_c = uc;
                    c.behavior.kappa_1 = ke;
                    c.label = "S1_uc" + num_label(uc) + "_ke" + num_label(ke);
                    out.push_back(c);
                }
            }
            break;
        }
        case PresetName::S2: {
            for (int k : {6, 9, 12}) {
                ScenarioConfig c = scenario_base();
                c.schedule.external_events[0].shifts.new_k_tol = k;
                c.label = "S2_k" + std::to_string(k);
                out.push_back(c);
            }
            break;
        }
        case PresetName::S3: {
            ScenarioConfig c = scenario_base();
            c.schedule.external_events[0].shifts.new_r_K = 0.06;
            c.label = "S3";
            out.push_back(c);
            break;
        }
        case PresetName::S4: {
            ScenarioConfig c = scenario_base();
            c.schedule.external_events[0].shifts.new_k_tol = 6;
            c.schedule.external_events[0].shifts.new_r_K = 0.06;
            c.label = "S4";
            out.push_back(c);
            break;
        }
    }
    return out;
}

ScenarioConfig counterfactual_of(const ScenarioConfig& config) {
    ScenarioConfig cf = config;
    cf.schedule.external_events.clear();
    cf.label += "_cf";
    return cf;
}

std::vector<PresetRun> run_preset(PresetName name) {
    std::vector<PresetRun> out;
    for (const auto& config : preset_configs(name)) {
        PresetRun run;
        run.label = config.label;
        run.config = config;
        run.with_intervention = simulate(config);
        run.counterfactual = simulate(counterfactual_of(config));
        out.push_back(std::move(run));
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON configuration
// ---------------------------------------------------------------------------

namespace {

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) {
                known = true;
                break;
            }
        if (!known)
            throw std::invalid_argument("config: unknown key '" + item.key() +
                                        "' in " + where);
    }
}

double get_num(const json& j, const std::string& field) {
    if (!j.is_number())
        throw std::invalid_argument("config: " + field + ": expected a number");
    return j.get<double>();
}

int get_int(const json& j, const std::string& field) {
    const double v = get_num(j, field);
    if (v != std::floor(v))
        throw std::invalid_argument("config: " + field + ": expected an integer");
    return static_cast<int>(v);
}

void apply_bio(const json& j, BioParams& p) {
    check_keys(j, "bio", {"rb", "nu_L", "mu_L", "mu_v"});
    if (j.contains("rb")) p.rb = get_num(j["rb"], "bio.rb");
    if (j.contains("nu_L")) p.nu_L = get_num(j["nu_L"], "bio.nu_L");
    if (j.contains("mu_L")) p.mu_L = get_num(j["mu_L"], "bio.mu_L");
    if (j.contains("mu_v")) p.mu_v = get_num(j["mu_v"], "bio.mu_v");
}

void apply_capacity(const json& j, CapacityParams& p) {
    check_keys(j, "capacity", {"r_K", "K_max", "K_0"});
    if (j.contains("r_K")) p.r_K = get_num(j["r_K"], "capacity.r_K");
    if (j.contains("K_max")) p.K_max = get_num(j["K_max"], "capacity.K_max");
    if (j.contains("K_0")) p.K_0 = get_num(j["K_0"], "capacity.K_0");
}

void apply_behavior(const json& j, BehaviorParams& p) {
    check_keys(j, "behavior",
               {"u_c", "beta", "income", "kappa_0", "kappa_1", "k_tol", "N_h"});
    if (j.contains("u_c")) p.u_c = get_num(j["u_c"], "behavior.u_c");
    if (j.contains("beta")) p.beta = get_num(j["beta"], "behavior.beta");
    if (j.contains("income")) p.income = get_num(j["income"], "behavior.income");
    if (j.contains("kappa_0")) p.kappa_0 = get_num(j["kappa_0"], "behavior.kappa_0");
    if (j.contains("kappa_1")) p.kappa_1 = get_num(j["kappa_1"], "behavior.kappa_1");
    if (j.contains("k_tol")) p.k_tol = get_int(j["k_tol"], "behavior.k_tol");
    if (j.contains("N_h")) p.N_h = get_num(j["N_h"], "behavior.N_h");
}

void apply_efficacy(const json& j, EfficacyFn& fn) {
    check_keys(j, "efficacy", {"kind", "a"});
    if (j.contains("kind")) {
        const std::string kind = j["kind"].get<std::string>();
        if (kind == "linear")
            fn.kind = EfficacyKind::Linear;
        else if (kind == "sigmoid")
            fn.kind = EfficacyKind::Sigmoid;
        else
            throw std::invalid_argument(
                "config: efficacy.kind: expected 'linear' or 'sigmoid'");
    }
    if (j.contains("a")) fn.a = get_num(j["a"], "efficacy.a");
}

void apply_schedule(const json& j, EventSchedule& s) {
    check_keys(j, "schedule", {"local", "external"});
    if (j.contains("local")) {
        if (j["local"].is_null()) {
            s.local.reset();
        } else {
            check_keys(j["local"], "schedule.local", {"t_0", "tau"});
            LocalControl lc = s.local.value_or(LocalControl{});
            if (j["local"].contains("t_0"))
                lc.t_0 = get_num(j["local"]["t_0"], "schedule.local.t_0");
            if (j["local"].contains("tau"))
                lc.tau = get_num(j["local"]["tau"], "schedule.local.tau");
            s.local = lc;
        }
    }
    if (j.contains("external")) {
        if (!j["external"].is_array())
            throw std::invalid_argument("config: schedule.external: expected an array");
        s.external_events.clear();
        for (const auto& je : j["external"]) {
            check_keys(je, "schedule.external[]", {"day", "fraction", "shift"});
            ExternalEvent ev;
            if (je.contains("day")) ev.day = get_num(je["day"], "schedule.external.day");
            if (je.contains("fraction"))
                ev.extra_fraction = get_num(je["fraction"], "schedule.external.fraction");
            if (je.contains("shift")) {
                const auto& js = je["shift"];
                check_keys(js, "schedule.external[].shift",
                           {"k_tol", "r_K", "persistent_s_e"});
                if (js.contains("k_tol"))
                    ev.shifts.new_k_tol = get_int(js["k_tol"], "shift.k_tol");
                if (js.contains("r_K"))
                    ev.shifts.new_r_K = get_num(js["r_K"], "shift.r_K");
                if (js.contains("persistent_s_e")) {
                    if (!js["persistent_s_e"].is_boolean())
                        throw std::invalid_argument(
                            "config: shift.persistent_s_e: expected a boolean");
                    ev.shifts.persistent_s_e = js["persistent_s_e"].get<bool>();
                }
            }
            s.external_events.push_back(ev);
        }
    }
}

void apply_mode(const json& j, BehaviorMode& m) {
    check_keys(j, "mode", {"kind", "gamma"});
    if (j.contains("kind")) {
        const std::string kind = j["kind"].get<std::string>();
        if (kind == "endogenous")
            m.kind = BehaviorMode::Kind::Endogenous;
        else if (kind == "frozen")
            m.kind = BehaviorMode::Kind::Frozen;
        else
            throw std::invalid_argument(
                "config: mode.kind: expected 'endogenous' or 'frozen'");
    }
    if (j.contains("gamma")) m.frozen_gamma = get_num(j["gamma"], "mode.gamma");
}

}  // namespace

ScenarioConfig config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
    check_keys(j, "the top level",
               {"preset", "label", "bio", "capacity", "behavior", "efficacy",
                "dist_scale", "initial", "schedule", "mode", "step",
                "output_interval", "horizon"});

    ScenarioConfig c;
    if (j.contains("preset")) {
        const auto cells = preset_configs(parse_preset_name(j["preset"].get<std::string>()));
        c = cells[cells.size() / 2];  // middle grid cell of gridded presets
    }
    if (j.contains("label")) c.label = j["label"].get<std::string>();
    if (j.contains("bio")) apply_bio(j["bio"], c.bio);
    if (j.contains("capacity")) apply_capacity(j["capacity"], c.capacity);
    if (j.contains("behavior")) apply_behavior(j["behavior"], c.behavior);
    if (j.contains("efficacy")) apply_efficacy(j["efficacy"], c.efficacy);
    if (j.contains("dist_scale")) {
        if (j["dist_scale"].is_string()) {
            if (j["dist_scale"].get<std::string>() != "auto")
                throw std::invalid_argument(
                    "config: dist_scale: expected 'auto' or a number");
            c.dist_scale.reset();
        } else {
            c.dist_scale = get_num(j["dist_scale"], "dist_scale");
        }
    }
    if (j.contains("initial")) {
        check_keys(j["initial"], "initial", {"L", "A"});
        if (j["initial"].contains("L")) c.L_0 = get_num(j["initial"]["L"], "initial.L");
        if (j["initial"].contains("A")) c.A_0 = get_num(j["initial"]["A"], "initial.A");
    }
    if (j.contains("schedule")) apply_schedule(j["schedule"], c.schedule);
    if (j.contains("mode")) apply_mode(j["mode"], c.mode);
    if (j.contains("step")) c.step = get_num(j["step"], "step");
    if (j.contains("output_interval"))
        c.output_interval = get_num(j["output_interval"], "output_interval");
    if (j.contains("horizon")) c.horizon = get_num(j["horizon"], "horizon");

    try {
        c.validate();
    } catch (const std::logic_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    return c;
}

ScenarioConfig load_config(const std::string& path) {
    return config_from_json_text(read_file(path));
}

std::string config_to_json_text(const ScenarioConfig& c) {
    json j;
    j["label"] = c.label;
    j["bio"] = {{"rb", c.bio.rb},
                {"nu_L", c.bio.nu_L},
                {"mu_L", c.bio.mu_L},
                {"mu_v", c.bio.mu_v}};
    j["capacity"] = {{"r_K", c.capacity.r_K},
                     {"K_max", c.capacity.K_max},
                     {"K_0", c.capacity.K_0}};
    j["behavior"] = {{"u_c", c.behavior.u_c},       {"beta", c.behavior.beta},
                     {"income", c.behavior.income}, {"kappa_0", c.behavior.kappa_0},
                     {"kappa_1", c.behavior.kappa_1}, {"k_tol", c.behavior.k_tol},
                     {"N_h", c.behavior.N_h}};
    j["efficacy"] = {{"kind", c.efficacy.kind == EfficacyKind::Linear ? "linear"
                                                                      : "sigmoid"},
                     {"a", c.efficacy.a}};
    if (c.dist_scale)
        j["dist_scale"] = *c.dist_scale;
    else
        j["dist_scale"] = "auto";
    j["initial"] = {{"L", c.L_0}, {"A", c.A_0}};
    if (c.schedule.local)
        j["schedule"]["local"] = {{"t_0", c.schedule.local->t_0},
                                  {"tau", c.schedule.local->tau}};
    else
        j["schedule"]["local"] = nullptr;
    j["schedule"]["external"] = json::array();
    for (const auto& ev : c.schedule.external_events) {
        json je = {{"day", ev.day}, {"fraction", ev.extra_fraction}};
        json js = json::object();
        if (ev.shifts.new_k_tol) js["k_tol"] = *ev.shifts.new_k_tol;
        if (ev.shifts.new_r_K) js["r_K"] = *ev.shifts.new_r_K;
        js["persistent_s_e"] = ev.shifts.persistent_s_e;
        je["shift"] = js;
        j["schedule"]["external"].push_back(je);
    }
    if (c.mode.kind == BehaviorMode::Kind::Frozen)
        j["mode"] = {{"kind", "frozen"}, {"gamma", c.mode.frozen_gamma}};
    else
        j["mode"] = {{"kind", "endogenous"}};
    j["step"] = c.step;
    j["output_interval"] = c.output_interval;
    j["horizon"] = c.horizon;
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Reporting
// ---------------------------------------------------------------------------

std::optional<double> report_recovery_time(const Trajectory& traj,
                                           const Trajectory& counterfactual,
                                           double tol) {
    const auto& a = traj.samples;
    const auto& b = counterfactual.samples;
    if (a.size() != b.size())
        throw std::invalid_argument("report_recovery_time: trajectories differ in length");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i].t - b[i].t) > 1e-9)
            throw std::invalid_argument("report_recovery_time: time grids differ");
    double event_day = -1.0;
    for (const auto& rec : traj.impulse_log)
        if (rec.s_e == 1) {
            event_day = rec.t;
            break;
        }
    if (event_day < 0.0 || a.size() < 2) return std::nullopt;
    const double interval = a[1].t - a[0].t;
    const auto window = std::max<long long>(1, std::llround(7.0 / interval));

    long long run = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].t < event_day - 1e-9) continue;
        const bool defined = b[i].A_v >= 1.0;
        const bool ok =
            defined && std::abs(a[i].A_v - b[i].A_v) / b[i].A_v < tol;
        run = ok ? run + 1 : 0;
        if (run == window)
            return a[i - static_cast<std::size_t>(window) + 1].t - event_day;
    }
    return std::nullopt;
}

SummaryRow summarize(const std::string& label, const ScenarioConfig& config,
                     const Trajectory& with_run, const Trajectory& cf_run) {
    SummaryRow row;
    row.label = label;
    if (config.schedule.local) {
        const double tau = config.schedule.local->tau;
        const double periods = config.horizon / tau;
        if (periods > 10.0) {
            row.orbit = detect_periodic_orbit(with_run, tau, 1e-3);
            row.cf_orbit = detect_periodic_orbit(cf_run, tau, 1e-3);
        }
    }
    row.recovery_days = report_recovery_time(with_run, cf_run, 0.05);
    if (!with_run.impulse_log.empty()) row.final_H = with_run.impulse_log.back().H;
    if (!cf_run.impulse_log.empty()) row.cf_final_H = cf_run.impulse_log.back().H;
    return row;
}

namespace {

std::string opt_num(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::string out =
        "label,orbit_mean,orbit_min,orbit_max,cf_orbit_mean,cf_orbit_min,"
        "cf_orbit_max,recovery_days,final_H,cf_final_H\n";
    for (const auto& r : rows) {
        out += r.label;
        for (const auto& orbit : {r.orbit, r.cf_orbit}) {
            if (orbit) {
                out += ',' + format_double(orbit->mean) + ',' +
                       format_double(orbit->min) + ',' + format_double(orbit->max);
            } else {
                out += ",,,";
            }
        }
        out += ',' + opt_num(r.recovery_days);
        out += ',' + opt_num(r.final_H);
        out += ',' + opt_num(r.cf_final_H);
        out += '\n';
    }
    return out;
}

void emit_pair(const std::string& dir, const std::string& label,
               const Trajectory& with_run, const Trajectory& cf_run) {
    emit_trajectory_csv(with_run, dir + "/" + label + "_trajectory.csv");
    emit_impulse_csv(with_run, dir + "/" + label + "_impulses.csv");
    emit_trajectory_csv(cf_run, dir + "/" + label + "_cf_trajectory.csv");
    emit_impulse_csv(cf_run, dir + "/" + label + "_cf_impulses.csv");

    Panel adults{"Adult mosquitoes: " + label, "A_v", {}};
    Panel part{"Participation: " + label, "H", {}};
    Series aw{"with intervention", {}, {}}, ac{"without intervention", {}, {}};
    for (const auto& s : with_run.samples) {
        aw.x.push_back(s.t);
        aw.y.push_back(s.A_v);
    }
    for (const auto& s : cf_run.samples) {
        ac.x.push_back(s.t);
        ac.y.push_back(s.A_v);
    }
    Series hw{"with intervention", {}, {}}, hc{"without intervention", {}, {}};
    for (const auto& r : with_run.impulse_log) {
        hw.x.push_back(r.t);
        hw.y.push_back(r.H);
    }
    for (const auto& r : cf_run.impulse_log) {
        hc.x.push_back(r.t);
        hc.y.push_back(r.H);
    }
    adults.series = {aw, ac};
    part.series = {hw, hc};
    emit_svg({adults, part}, dir + "/" + label + ".svg");
}

}  // namespace

void write_run_outputs(const ScenarioConfig& config, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const Trajectory with_run = simulate(config);
    const Trajectory cf_run = simulate(counterfactual_of(config));
    emit_pair(out_dir, config.label, with_run, cf_run);
    write_file(out_dir + "/summary.csv",
               summary_csv({summarize(config.label, config, with_run, cf_run)}));
}

void write_preset_outputs(PresetName name, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::vector<SummaryRow> rows;
    for (const auto& run : run_preset(name)) {
        emit_pair(out_dir, run.label, run.with_intervention, run.counterfactual);
        rows.push_back(
            summarize(run.label, run.config, run.with_intervention, run.counterfactual));
    }
    write_file(out_dir + "/summary.csv", summary_csv(rows));
}

SweepAxis parse_sweep_axis(const std::string& arg) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= arg.size())
        throw std::invalid_argument("sweep axis must look like path=v1,v2,...");
    SweepAxis axis;
    axis.path = arg.substr(0, eq);
    std::string rest = arg.substr(eq + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        const auto comma = rest.find(',', pos);
        const std::string tok =
            rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("sweep axis: empty value");
        axis.values.push_back(parse_double(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (axis.values.empty()) throw std::invalid_argument("sweep axis: no values");
    return axis;
}

void write_sweep_outputs(const std::string& config_path, const SweepAxis& axis,
                         const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    json base;
    try {
        base = json::parse(read_file(config_path));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    std::string pointer = "/" + axis.path;
    std::replace(pointer.begin(), pointer.end(), '.', '/');
    const std::string leaf = axis.path.substr(axis.path.rfind('.') + 1);

    std::vector<SummaryRow> rows;
    for (double v : axis.values) {
        json j = base;
        j[json::json_pointer(pointer)] = v;
        ScenarioConfig config = config_from_json_text(j.dump());
        config.label += "_" + leaf + "_" + format_double(v);
        const Trajectory with_run = simulate(config);
        const Trajectory cf_run = simulate(counterfactual_of(config));
        emit_pair(out_dir, config.label, with_run, cf_run);
        rows.push_back(summarize(config.label, config, with_run, cf_run));
    }
    write_file(out_dir + "/summary.csv", summary_csv(rows));
}

}  // namespace vectorsim
