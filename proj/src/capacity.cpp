#include "vectorsim/capacity.hpp"

#include <cmath>
#include <stdexcept>

namespace vectorsim {

void CapacityParams::validate() const {
    if (!std::isfinite(r_K) || r_K < 0.0)
        throw std::domain_error("CapacityParams.r_K must be finite and >= 0");
    if (!std::isfinite(K_max) || K_max <= 0.0)
        throw std::domain_error("CapacityParams.K_max must be finite and > 0");
    if (!std::isfinite(K_0) || K_0 <= 0.0 || K_0 > K_max)
        throw std::domain_error("CapacityParams.K_0 must satisfy 0 < K_0 <= K_max");
}

void ImpulseSchedule::validate() const {
    if (!std::isfinite(tau) || tau <= 0.0)
        throw std::domain_error("ImpulseSchedule.tau must be > 0");
    if (!std::isfinite(t_0) || t_0 < 0.0)
        throw std::domain_error("ImpulseSchedule.t_0 must be >= 0");
    if (!std::isfinite(horizon) || horizon <= t_0)
        throw std::domain_error("ImpulseSchedule.horizon must exceed t_0");
}

double capacity_flow(double K_start, const CapacityParams& cp, double dt) {
    if (!std::isfinite(dt) || dt < 0.0)
        throw std::domain_error("capacity_flow: dt must be >= 0");
    if (!std::isfinite(K_start) || K_start < 0.0)
        throw std::domain_error("capacity_flow: K_start must be >= 0");
    return cp.K_max + (K_start - cp.K_max) * std::exp(-cp.r_K * dt);
}

double apply_impulse(double K, double gamma_val) {
    if (!std::isfinite(gamma_val) || gamma_val < 0.0 || gamma_val >= 1.0)
        throw std::domain_error("apply_impulse: gamma_val must lie in [0,1)");
    if (!std::isfinite(K) || K < 0.0)
        throw std::domain_error("apply_impulse: K must be >= 0");
    return (1.0 - gamma_val) * K;
}

double periodic_capacity(const CapacityParams& cp, double tau, double gamma_H0,
                         double phase) {
    if (cp.r_K <= 0.0)
        throw std::domain_error("periodic_capacity: requires r_K > 0");
    if (!(tau > 0.0)) throw std::domain_error("periodic_capacity: requires tau > 0");
    if (!(gamma_H0 > 0.0 && gamma_H0 < 1.0))
        throw std::domain_error("periodic_capacity: gamma_H0 must lie in (0,1)");
    if (!(phase >= 0.0 && phase < tau))
        throw std::domain_error("periodic_capacity: phase must lie in [0,tau)");
    const double denom = 1.0 - (1.0 - gamma_H0) * std::exp(-cp.r_K * tau);
    return (1.0 - gamma_H0 * std::exp(-cp.r_K * phase) / denom) * cp.K_max;
}

OrbitBounds periodic_capacity_bounds(const CapacityParams& cp, double tau,
                                     double gamma_H0) {
    if (cp.r_K <= 0.0)
        throw std::domain_error("periodic_capacity_bounds: requires r_K > 0");
    if (!(gamma_H0 > 0.0 && gamma_H0 < 1.0))
        throw std::domain_error("periodic_capacity_bounds: gamma_H0 must lie in (0,1)");
    const double E = std::exp(-cp.r_K * tau);
    const double denom = 1.0 - (1.0 - gamma_H0) * E;
    return {(1.0 - gamma_H0) * (1.0 - E) / denom * cp.K_max,
            (1.0 - E) / denom * cp.K_max};
}

}  // namespace vectorsim
