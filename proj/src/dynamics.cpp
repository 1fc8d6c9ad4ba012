#include "vectorsim/dynamics.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vectorsim {

namespace {

bool divides(double step, double value) {
    const auto m = std::llround(value / step);
    return m >= 0 && std::abs(static_cast<double>(m) * step - value) <=
                         1e-9 * std::max(1.0, std::abs(value));
}

long long steps_of(double step, double value) {
    return std::llround(value / step);
}

}  // namespace

ParticipationDist ScenarioConfig::dist() const {
    if (dist_scale) return {*dist_scale};
    return {behavior.u_c / (behavior.marginal_utility() * behavior.kappa_0)};
}

void ScenarioConfig::validate() const {
    bio.validate();
    capacity.validate();
    behavior.validate();
    efficacy.validate();
    if (!std::isfinite(L_0) || L_0 < 0.0)
        throw std::invalid_argument("initial.L: must be >= 0");
    if (!std::isfinite(A_0) || A_0 < 0.0)
        throw std::invalid_argument("initial.A: must be >= 0");
    if (!std::isfinite(step) || step <= 0.0)
        throw std::invalid_argument("step: must be > 0");
    if (!std::isfinite(horizon) || horizon < step)
        throw std::invalid_argument("horizon: must be >= step");
    if (schedule.local) {
        const auto& lc = *schedule.local;
        ImpulseSchedule{lc.t_0, lc.tau, horizon}.validate();
        if (!divides(step, lc.tau))
            throw std::invalid_argument("step: must divide schedule.local.tau");
        if (!divides(step, lc.t_0))
            throw std::invalid_argument("step: must divide schedule.local.t_0");
    }
    if (!divides(step, horizon))
        throw std::invalid_argument("step: must divide horizon");
    if (!std::isfinite(output_interval) || output_interval < step ||
        !divides(step, output_interval))
        throw std::invalid_argument("output_interval: must be a multiple of step");
    if (dist_scale && (!std::isfinite(*dist_scale) || *dist_scale <= 0.0))
        throw std::invalid_argument("dist_scale: must be > 0");
    if (mode.kind == BehaviorMode::Kind::Frozen &&
        (!std::isfinite(mode.frozen_gamma) || mode.frozen_gamma < 0.0 ||
         mode.frozen_gamma >= 1.0))
        throw std::invalid_argument("mode.gamma: must lie in [0,1)");
    std::set<long long> seen;
    for (const auto& ev : schedule.external_events) {
        if (!std::isfinite(ev.day) || ev.day < 0.0 || ev.day > horizon)
            throw std::invalid_argument("schedule.external.day: must lie in [0, horizon]");
        if (!divides(step, ev.day))
            throw std::invalid_argument("step: must divide schedule.external.day");
        if (!std::isfinite(ev.extra_fraction) || ev.extra_fraction < 0.0 ||
            ev.extra_fraction >= 1.0)
            throw std::invalid_argument("schedule.external.fraction: must lie in [0,1)");
        if (ev.shifts.new_k_tol && *ev.shifts.new_k_tol < 0)
            throw std::invalid_argument("schedule.external.shift.k_tol: must be >= 0");
        if (ev.shifts.new_r_K &&
            (!std::isfinite(*ev.shifts.new_r_K) || *ev.shifts.new_r_K < 0.0))
            throw std::invalid_argument("schedule.external.shift.r_K: must be >= 0");
        if (!seen.insert(steps_of(step, ev.day)).second)
            throw std::invalid_argument("schedule.external.day: duplicate event day");
    }
}

SimState nsfd_step(const SimState& state, const BioParams& p,
                   const CapacityParams& cp, double h) {
    if (!std::isfinite(h) || h <= 0.0)
        throw std::domain_error("nsfd_step: h must be > 0");
    if (!std::isfinite(state.L_v) || !std::isfinite(state.A_v) ||
        !std::isfinite(state.K_v) || state.K_v <= 0.0)
        throw std::domain_error("nsfd_step: invalid state");
    const double Q = p.nu_L + p.mu_L + p.mu_v;
    const double phi = (1.0 - std::exp(-Q * h)) / Q;
    const double L1 = (state.L_v + phi * p.rb * state.A_v) /
                      (1.0 + phi * (p.rb * state.A_v / state.K_v + p.nu_L + p.mu_L));
    const double A1 = (state.A_v + phi * p.nu_L * L1) / (1.0 + phi * p.mu_v);
    return {state.t + h, L1, A1, capacity_flow(state.K_v, cp, h)};
}

Trajectory simulate(const ScenarioConfig& config) {
    config.validate();
    const double h = config.step;
    const long long n = steps_of(h, config.horizon);
    const long long out_every = steps_of(h, config.output_interval);

    long long local_start = -1, local_period = 0;
    if (config.schedule.local) {
        local_start = steps_of(h, config.schedule.local->t_0);
        local_period = steps_of(h, config.schedule.local->tau);
    }
    std::map<long long, const ExternalEvent*> events;
    for (const auto& ev : config.schedule.external_events)
        events[steps_of(h, ev.day)] = &ev;

    const ParticipationDist dist = config.dist();
    double L = config.L_0, A = config.A_0, K = config.capacity.K_0;
    CapacityParams cap = config.capacity;
    BehaviorParams beh = config.behavior;

    Trajectory traj;
    traj.samples.reserve(static_cast<std::size_t>(n / out_every) + 2);

    for (long long i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) * h;
        const bool local_due = local_start >= 0 && i >= local_start &&
                               (i - local_start) % local_period == 0;
        const auto ev_it = events.find(i);
        const bool external_due = ev_it != events.end();
        if (local_due || external_due) {
            const double K_pre = K;
            const double pi = bite_probability(A, beh.N_h, beh.k_tol);
            BehaviorParams decision = beh;
            decision.s_e = (beh.s_e == 1 || external_due) ? 1 : 0;
            const double H = participation_rate(pi, decision, dist);
            double gamma = 0.0;
            if (local_due) {
                gamma = config.mode.kind == BehaviorMode::Kind::Frozen
                            ? config.mode.frozen_gamma
                            : efficacy(H, config.efficacy);
                K = apply_impulse(K, gamma);
            }
            if (external_due) {
                const ExternalEvent& ev = *ev_it->second;
                K = apply_impulse(K, ev.extra_fraction);
                if (ev.shifts.new_k_tol) beh.k_tol = *ev.shifts.new_k_tol;
                if (ev.shifts.new_r_K) cap.r_K = *ev.shifts.new_r_K;
                if (ev.shifts.persistent_s_e) beh.s_e = 1;
            }
            traj.impulse_log.push_back({t, pi, H, gamma, K_pre, K, decision.s_e});
        }
        if (i % out_every == 0) traj.samples.push_back({t, L, A, K});
        if (i < n) {
            const SimState next = nsfd_step({t, L, A, K}, config.bio, cap, h);
            if (!std::isfinite(next.L_v) || !std::isfinite(next.A_v) ||
                !std::isfinite(next.K_v)) {
                std::ostringstream msg;
                msg << "simulate: non-finite state at t=" << next.t
                    << " (L=" << next.L_v << ", A=" << next.A_v
                    << ", K=" << next.K_v << ")";
                throw std::runtime_error(msg.str());
            }
            L = next.L_v;
            A = next.A_v;
            K = next.K_v;
        }
    }
    return traj;
}

std::optional<OrbitSummary> detect_periodic_orbit(const Trajectory& traj,
                                                  double tau, double tol) {
    const auto& s = traj.samples;
    if (s.size() < 3) throw std::invalid_argument("detect_periodic_orbit: too few samples");
    const double dt = s[1].t - s[0].t;
    const auto per = std::llround(tau / dt);
    if (per < 1 || std::abs(static_cast<double>(per) * dt - tau) > 1e-9 * tau)
        throw std::invalid_argument(
            "detect_periodic_orbit: tau must be a multiple of the sampling interval");
    const auto total_periods = (static_cast<long long>(s.size()) - 1) / per;
    if (total_periods <= 10)
        throw std::invalid_argument(
            "detect_periodic_orbit: trajectory must span more than 10 periods");

    const std::size_t end = s.size();
    const std::size_t b0 = end - static_cast<std::size_t>(per);
    const std::size_t a0 = end - 2 * static_cast<std::size_t>(per);
    OrbitSummary out{0.0, s[b0].A_v, s[b0].A_v};
    for (std::size_t k = 0; k < static_cast<std::size_t>(per); ++k) {
        const double prev = s[a0 + k].A_v, cur = s[b0 + k].A_v;
        if (std::abs(cur - prev) > tol * std::max(std::abs(prev), 1e-300))
            return std::nullopt;
        out.mean += cur;
        out.min = std::min(out.min, cur);
        out.max = std::max(out.max, cur);
    }
    out.mean /= static_cast<double>(per);
    return out;
}

}  // namespace vectorsim
