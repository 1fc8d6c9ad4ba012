#ifndef VECTORSIM_DYNAMICS_HPP
#define VECTORSIM_DYNAMICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "vectorsim/behavior.hpp"
#include "vectorsim/capacity.hpp"
#include "vectorsim/entomology.hpp"

namespace vectorsim {

struct SimState {
    double t;    // [day]
    double L_v;  // aquatic stage [individuals]
    double A_v;  // adult females [individuals]
    double K_v;  // current carrying capacity [individuals]
};

// Parameter changes applied when an external event fires.
struct ParameterShift {
    std::optional<int> new_k_tol;     // bite tolerance after the event
    std::optional<double> new_r_K;    // capacity recovery rate after the event
    bool persistent_s_e = true;       // keep s_e = 1 after the event day
};

struct ExternalEvent {
    double day = 70.0;
    double extra_fraction = 0.5;  // capacity fraction destroyed on top of local control
    ParameterShift shifts;
};

struct LocalControl {
    double t_0 = 0.0;  // first control day
    double tau = 7.0;  // control period [day]
};

struct EventSchedule {
    std::optional<LocalControl> local;  // absent: no recurring local control
    std::vector<ExternalEvent> external_events;
};

// Either couple the impulse size to the household decision each control day,
// or freeze the destroyed fraction at a constant (pure-entomology runs).
struct BehaviorMode {
    enum class Kind { Endogenous, Frozen };
    Kind kind = Kind::Endogenous;
    double frozen_gamma = 0.0;  // used when kind == Frozen; in [0,1)
};

struct TrajectorySample {
    double t, L_v, A_v, K_v;
};

// One record per day on which any impulse fires. gamma is the locally applied
// fraction (0 on external-only days); K_pre/K_post bracket all same-day
// impulses; s_e is the flag used for that day's participation decision.
struct ImpulseRecord {
    double t, pi, H, gamma, K_pre, K_post;
    int s_e;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    std::vector<ImpulseRecord> impulse_log;
};

struct ScenarioConfig {
    std::string label = "run";
    BioParams bio{5.0, 1.0 / 15.0, 0.01, 0.05};
    CapacityParams capacity{0.05, 2e6, 20000.0};
    BehaviorParams behavior{0.6, 1.2, 103.0, 14.8, 50.0, 3, 200000.0, 0};
    EfficacyFn efficacy{EfficacyKind::Sigmoid, 2.0};
    // Cost-proclivity scale; unset means u_c / (W * kappa_0).
    std::optional<double> dist_scale;
    double L_0 = 20000.0;
    double A_0 = 20000.0;
    EventSchedule schedule;
    BehaviorMode mode;
    double step = 0.1;             // [day]; must divide tau and all event days
    double output_interval = 1.0;  // [day]; multiple of step
    double horizon = 365.0;        // [day]

    ParticipationDist dist() const;
    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// One step of the positivity-preserving nonstandard scheme:
//   phi  = (1 - e^(-Q*h))/Q,  Q = nu_L + mu_L + mu_v
//   L'   = (L + phi*rb*A) / (1 + phi*(rb*A/K + nu_L + mu_L))
//   A'   = (A + phi*nu_L*L') / (1 + phi*mu_v)
// K advances by the exact capacity flow. The map keeps L, A >= 0 for any
// h > 0 and has exactly the ODE equilibria as fixed points.
SimState nsfd_step(const SimState& state, const BioParams& p,
                   const CapacityParams& cp, double h);

// Deterministic run of the full coupled system. On each control day: flow to
// the day, compute pi -> H -> gamma and cut K by gamma; on an event day
// additionally cut by extra_fraction and apply the shifts; then sample the
// post-impulse state. Identical configs give bit-identical trajectories.
Trajectory simulate(const ScenarioConfig& config);

struct OrbitSummary {
    double mean, min, max;  // of A_v over one period
};

// Statistics of the asymptotic period-tau orbit of A_v, from the last two
// full periods of daily samples; nullopt while still transient (pointwise
// relative disagreement above tol). Requires > 10 periods of samples.
std::optional<OrbitSummary> detect_periodic_orbit(const Trajectory& traj,
                                                  double tau, double tol);

}  // namespace vectorsim

#endif
