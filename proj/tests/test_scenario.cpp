#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "vectorsim/io.hpp"
#include "vectorsim/scenario.hpp"
#include "vectorsim/svg.hpp"

using namespace vectorsim;

namespace {

std::string make_temp_dir() {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path() /
                     ("vectorsim_test_" + std::to_string(::getpid()) + "_" +
                      std::to_string(counter++));
    std::filesystem::create_directories(dir);
    return dir.string();
}

double H_at(const Trajectory& traj, double day) {
    for (const auto& rec : traj.impulse_log)
        if (std::abs(rec.t - day) < 1e-9) return rec.H;
    throw std::runtime_error("no impulse record at requested day");
}

}  // namespace

TEST_CASE("config loading") {
    SUBCASE("minimal preset file carries the survey defaults") {
        const auto c = config_from_json_text(R"({"preset": "Baseline"})");
        CHECK(c.bio.rb == 5.0);
        CHECK(c.bio.nu_L == doctest::Approx(1.0 / 15.0));
        CHECK(c.bio.mu_L == 0.01);
        CHECK(c.bio.mu_v == 0.05);
        CHECK(c.capacity.K_max == 2e6);
        CHECK(c.capacity.r_K == 0.05);
        CHECK(c.capacity.K_0 == 20000.0);
        CHECK(c.behavior.N_h == 200000.0);
        CHECK(c.behavior.kappa_0 == 14.8);
        CHECK(c.L_0 == 20000.0);
        CHECK(c.A_0 == 20000.0);
        CHECK(!c.schedule.local.has_value());
        REQUIRE(c.schedule.external_events.size() == 1);
        CHECK(c.schedule.external_events[0].day == 70.0);
        CHECK(c.schedule.external_events[0].extra_fraction == 0.5);
        CHECK(c.mode.kind == BehaviorMode::Kind::Frozen);
        CHECK(c.mode.frozen_gamma == 0.0);
        CHECK(c.horizon == 365.0);
        CHECK(c.step == 0.1);
    }
    SUBCASE("an incompatible step is rejected with the field named") {
        CHECK_THROWS_WITH_AS(
            config_from_json_text(R"({"preset": "S3", "step": 0.3})"),
            "config: step: must divide schedule.local.tau", std::invalid_argument);
    }
    SUBCASE("unknown keys are rejected by name") {
        CHECK_THROWS_WITH_AS(config_from_json_text(R"({"horizont": 100})"),
                             "config: unknown key 'horizont' in the top level",
                             std::invalid_argument);
        CHECK_THROWS_WITH_AS(
            config_from_json_text(R"({"behavior": {"uc": 0.6}})"),
            "config: unknown key 'uc' in behavior", std::invalid_argument);
    }
    SUBCASE("malformed JSON is a config error") {
        CHECK_THROWS_AS(config_from_json_text("{"), std::invalid_argument);
    }
    SUBCASE("field overrides on top of a preset") {
        const auto c = config_from_json_text(
            R"({"preset": "S3", "behavior": {"u_c": 0.9}, "horizon": 200})");
        CHECK(c.behavior.u_c == 0.9);
        CHECK(c.horizon == 200.0);
        REQUIRE(c.schedule.external_events.size() == 1);
        CHECK(c.schedule.external_events[0].shifts.new_r_K == 0.06);
    }
    SUBCASE("config serialization round-trips") {
        const auto c = preset_configs(PresetName::S4)[0];
        const auto again = config_from_json_text(config_to_json_text(c));
        CHECK(config_to_json_text(again) == config_to_json_text(c));
    }
}

TEST_CASE("preset fixture table") {
    SUBCASE("baseline") {
        const auto cells = preset_configs(PresetName::Baseline);
        REQUIRE(cells.size() == 1);
        CHECK(cells[0].mode.kind == BehaviorMode::Kind::Frozen);
        CHECK(cells[0].mode.frozen_gamma == 0.0);
        CHECK(!cells[0].schedule.local.has_value());
        REQUIRE(cells[0].schedule.external_events.size() == 1);
        CHECK(cells[0].schedule.external_events[0].day == 70.0);
        CHECK(cells[0].schedule.external_events[0].extra_fraction == 0.5);
    }
    SUBCASE("scenario 1 sweeps utility and external cost") {
        const auto cells = preset_configs(PresetName::S1);
        REQUIRE(cells.size() == 9);
        const double ucs[3] = {0.3, 0.6, 0.9};
        const double kes[3] = {0.0, 50.0, 100.0};
        for (int i = 0; i < 9; ++i) {
            CHECK(cells[i].behavior.u_c == ucs[i / 3]);
            CHECK(cells[i].behavior.kappa_1 == kes[i % 3]);
            CHECK(cells[i].behavior.k_tol == 3);
            REQUIRE(cells[i].schedule.local.has_value());
            CHECK(cells[i].schedule.local->tau == 7.0);
            CHECK(cells[i].schedule.local->t_0 == 0.0);
            CHECK(!cells[i].schedule.external_events[0].shifts.new_k_tol.has_value());
            CHECK(!cells[i].schedule.external_events[0].shifts.new_r_K.has_value());
        }
        CHECK(cells[4].label == "S1_uc0.6_ke50");
    }
    SUBCASE("scenario 2 shifts the bite tolerance") {
        const auto cells = preset_configs(PresetName::S2);
        REQUIRE(cells.size() == 3);
        const int ks[3] = {6, 9, 12};
        for (int i = 0; i < 3; ++i) {
            CHECK(cells[i].behavior.u_c == 0.6);
            CHECK(cells[i].behavior.kappa_1 == 50.0);
            CHECK(cells[i].schedule.external_events[0].shifts.new_k_tol == ks[i]);
            CHECK(!cells[i].schedule.external_events[0].shifts.new_r_K.has_value());
        }
    }
    SUBCASE("scenario 3 shifts the recovery rate") {
        const auto cells = preset_configs(PresetName::S3);
        REQUIRE(cells.size() == 1);
        CHECK(cells[0].schedule.external_events[0].shifts.new_r_K == 0.06);
        CHECK(!cells[0].schedule.external_events[0].shifts.new_k_tol.has_value());
    }
    SUBCASE("scenario 4 combines both shifts") {
        const auto cells = preset_configs(PresetName::S4);
        REQUIRE(cells.size() == 1);
        CHECK(cells[0].schedule.external_events[0].shifts.new_k_tol == 6);
        CHECK(cells[0].schedule.external_events[0].shifts.new_r_K == 0.06);
    }
    SUBCASE("preset names parse both ways") {
        for (const char* n : {"Baseline", "S1", "S2", "S3", "S4"})
            CHECK(to_string(parse_preset_name(n)) == n);
        CHECK_THROWS_AS(parse_preset_name("S5"), std::invalid_argument);
    }
}

TEST_CASE("counterfactual differs only in the external events") {
    const auto c = preset_configs(PresetName::S2)[0];
    auto cf = counterfactual_of(c);
    CHECK(cf.schedule.external_events.empty());
    cf.schedule.external_events = c.schedule.external_events;
    cf.label = c.label;
    CHECK(config_to_json_text(cf) == config_to_json_text(c));
}

TEST_CASE("trajectory CSV") {
    const auto dir = make_temp_dir();
    SUBCASE("empty trajectory gives a header-only file") {
        Trajectory empty;
        emit_trajectory_csv(empty, dir + "/empty.csv");
        CHECK(read_file(dir + "/empty.csv") == "t,L_v,A_v,K_v\n");
        emit_impulse_csv(empty, dir + "/empty_imp.csv");
        CHECK(read_file(dir + "/empty_imp.csv") == "t,pi,H,gamma,K_pre,K_post,s_e\n");
    }
    SUBCASE("a year at daily sampling is 366 rows") {
        const auto c = preset_configs(PresetName::Baseline)[0];
        const auto traj = simulate(c);
        emit_trajectory_csv(traj, dir + "/baseline.csv");
        const auto rows = parse_trajectory_csv(dir + "/baseline.csv");
        CHECK(rows.size() == 366);
    }
    SUBCASE("round-trip reproduces every sample exactly") {
        auto c = preset_configs(PresetName::S4)[0];
        c.horizon = 120.0;
        const auto traj = simulate(c);
        emit_trajectory_csv(traj, dir + "/s4.csv");
        const auto rows = parse_trajectory_csv(dir + "/s4.csv");
        REQUIRE(rows.size() == traj.samples.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].t == traj.samples[i].t);
            CHECK(rows[i].L_v == traj.samples[i].L_v);
            CHECK(rows[i].A_v == traj.samples[i].A_v);
            CHECK(rows[i].K_v == traj.samples[i].K_v);
        }
        emit_impulse_csv(traj, dir + "/s4_imp.csv");
        const auto recs = parse_impulse_csv(dir + "/s4_imp.csv");
        REQUIRE(recs.size() == traj.impulse_log.size());
        for (std::size_t i = 0; i < recs.size(); ++i) {
            CHECK(recs[i].pi == traj.impulse_log[i].pi);
            CHECK(recs[i].H == traj.impulse_log[i].H);
            CHECK(recs[i].K_post == traj.impulse_log[i].K_post);
            CHECK(recs[i].s_e == traj.impulse_log[i].s_e);
        }
    }
}

TEST_CASE("shortest round-trip double formatting") {
    for (double v : {0.1, 1.0 / 3.0, 2e6, 1295311.9102812866, 0.0, -42.5}) {
        CHECK(parse_double(format_double(v)) == v);
    }
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(365.0) == "365");
    CHECK_THROWS_AS(parse_double("12x"), std::runtime_error);
}

TEST_CASE("recovery time reporting") {
    SUBCASE("identical trajectories recover on the event day") {
        auto c = preset_configs(PresetName::Baseline)[0];
        c.horizon = 160.0;
        const auto traj = simulate(c);
        const auto rt = report_recovery_time(traj, traj, 0.05);
        REQUIRE(rt.has_value());
        CHECK(*rt == 0.0);
    }
    SUBCASE("the baseline pair recovers in finite weeks") {
        const auto runs = run_preset(PresetName::Baseline);
        const auto rt =
            report_recovery_time(runs[0].with_intervention, runs[0].counterfactual, 0.05);
        REQUIRE(rt.has_value());
        CHECK(*rt > 7.0);
        CHECK(*rt < 120.0);
    }
    SUBCASE("a pair that has died out reports nothing") {
        ScenarioConfig c;
        c.bio = {0.4, 0.5, 0.3, 0.5};  // offspring number 1/2, fast turnover
        c.capacity = {0.05, 2e6, 2e6};
        c.L_0 = c.A_0 = 1000.0;
        c.schedule.local.reset();
        c.schedule.external_events = {ExternalEvent{70.0, 0.5, {}}};
        c.mode = {BehaviorMode::Kind::Frozen, 0.0};
        c.horizon = 150.0;
        const auto with_run = simulate(c);
        const auto cf_run = simulate(counterfactual_of(c));
        CHECK(cf_run.samples.back().A_v < 1.0);
        CHECK(!report_recovery_time(with_run, cf_run, 0.05).has_value());
    }
    SUBCASE("mismatched grids are rejected") {
        auto c = preset_configs(PresetName::Baseline)[0];
        c.horizon = 100.0;
        const auto traj = simulate(c);
        auto c2 = c;
        c2.horizon = 120.0;
        CHECK_THROWS_AS(report_recovery_time(traj, simulate(c2), 0.05),
                        std::invalid_argument);
    }
}

TEST_CASE("baseline preset reproduces the dip-and-recover shape") {
    const auto runs = run_preset(PresetName::Baseline);
    REQUIRE(runs.size() == 1);
    const auto& w = runs[0].with_intervention.samples;
    const auto& cf = runs[0].counterfactual.samples;
    double worst = 1.0;
    std::size_t worst_i = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].t <= 70.0) continue;
        const double ratio = w[i].A_v / cf[i].A_v;
        if (ratio < worst) {
            worst = ratio;
            worst_i = i;
        }
    }
    CHECK(worst < 0.9);
    CHECK(w[worst_i].t > 70.0);
    CHECK(w[worst_i].t < 130.0);
    CHECK(w.back().A_v / cf.back().A_v > 0.95);
}

TEST_CASE("scenario 1: a costlier external intervention mobilizes more households") {
    std::vector<double> H70;
    for (const auto& run : run_preset(PresetName::S1))
        H70.push_back(H_at(run.with_intervention, 70.0));
    REQUIRE(H70.size() == 9);
    for (int block = 0; block < 3; ++block) {
        CHECK(H70[3 * block] < H70[3 * block + 1]);
        CHECK(H70[3 * block + 1] < H70[3 * block + 2]);
    }
}

TEST_CASE("preset outputs and determinism") {
    const auto dir1 = make_temp_dir();
    const auto dir2 = make_temp_dir();
    write_preset_outputs(PresetName::S4, dir1);
    write_preset_outputs(PresetName::S4, dir2);
    for (const char* name :
         {"S4_trajectory.csv", "S4_impulses.csv", "S4_cf_trajectory.csv",
          "S4_cf_impulses.csv", "summary.csv"}) {
        const auto a = read_file(dir1 + "/" + name);
        const auto b = read_file(dir2 + "/" + name);
        CHECK(a == b);
        CHECK(!a.empty());
    }
    const auto svg = read_file(dir1 + "/S4.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("nan") == std::string::npos);
    const auto summary = read_file(dir1 + "/summary.csv");
    CHECK(summary.find("label,orbit_mean") == 0);
    CHECK(summary.find("S4") != std::string::npos);
}

TEST_CASE("sweep runs each value with its counterfactual") {
    const auto dir = make_temp_dir();
    write_file(dir + "/cfg.json",
               R"({"preset": "S3", "horizon": 100, "label": "sw"})");
    const auto axis = parse_sweep_axis("behavior.u_c=0.3,0.9");
    CHECK(axis.path == "behavior.u_c");
    REQUIRE(axis.values.size() == 2);
    write_sweep_outputs(dir + "/cfg.json", axis, dir + "/out");
    CHECK(!read_file(dir + "/out/sw_u_c_0.3_trajectory.csv").empty());
    CHECK(!read_file(dir + "/out/sw_u_c_0.9_trajectory.csv").empty());
    CHECK(!read_file(dir + "/out/sw_u_c_0.3_cf_trajectory.csv").empty());
    const auto summary = read_file(dir + "/out/summary.csv");
    CHECK(summary.find("sw_u_c_0.3") != std::string::npos);
    CHECK(summary.find("sw_u_c_0.9") != std::string::npos);
    CHECK_THROWS_AS(parse_sweep_axis("behavior.u_c"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_axis("=1,2"), std::invalid_argument);
}
