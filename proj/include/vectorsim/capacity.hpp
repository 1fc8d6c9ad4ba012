#ifndef VECTORSIM_CAPACITY_HPP
#define VECTORSIM_CAPACITY_HPP

namespace vectorsim {

struct CapacityParams {
    double r_K;    // recovery rate toward K_max [1/day]; 0 freezes the capacity
    double K_max;  // maximal larvae capacity [individuals]
    double K_0;    // initial capacity [individuals], 0 < K_0 <= K_max

    void validate() const;
};

// Timing of the recurring local-control impulses.
struct ImpulseSchedule {
    double t_0;      // first control day
    double tau;      // period between controls [day]
    double horizon;  // simulation end [day]

    void validate() const;
};

// Exact solution of dK/dt = r_K*(K_max - K) after dt days from K_start:
// K_max + (K_start - K_max)*exp(-r_K*dt). Throws on dt < 0.
double capacity_flow(double K_start, const CapacityParams& cp, double dt);

// Instantaneous destruction of a fraction gamma_val of the capacity.
// Requires 0 <= gamma_val < 1.
double apply_impulse(double K, double gamma_val);

// The unique tau-periodic orbit of flow + impulse with constant efficacy
// gamma_H0, evaluated at a phase in [0, tau) measured from the impulse:
//   K_per(phase) = (1 - gamma_H0*e^(-r_K*phase) / (1 - (1-gamma_H0)*e^(-r_K*tau))) * K_max
// Phase 0 is the post-impulse minimum. Requires r_K > 0 and gamma_H0 in (0,1).
double periodic_capacity(const CapacityParams& cp, double tau, double gamma_H0,
                         double phase);

struct OrbitBounds {
    double K_min;        // orbit value just after an impulse (phase 0)
    double K_max_orbit;  // orbit value just before an impulse (phase tau-)
};

OrbitBounds periodic_capacity_bounds(const CapacityParams& cp, double tau,
                                     double gamma_H0);

}  // namespace vectorsim

#endif
