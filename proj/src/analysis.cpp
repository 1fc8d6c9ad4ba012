#include "vectorsim/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace vectorsim {

double impulse_strength(double r_K, double gamma_H0, double tau) {
    if (!std::isfinite(r_K) || r_K <= 0.0)
        throw std::domain_error("impulse_strength: requires r_K > 0");
    if (!std::isfinite(tau) || tau <= 0.0)
        throw std::domain_error("impulse_strength: requires tau > 0");
    if (!(gamma_H0 >= 0.0 && gamma_H0 < 1.0))
        throw std::domain_error("impulse_strength: gamma_H0 must lie in [0,1)");
    return r_K * gamma_H0 / (1.0 - std::exp(-r_K * tau));
}

namespace {

double rhs_product(const BioParams& p, double C, double damp) {
    return (1.0 + p.mu_v / p.nu_L * damp * C) *
           (1.0 + damp * C / (p.nu_L + p.mu_L));
}

}  // namespace

bool persistence_condition(const BioParams& p, double gamma_H0, double r_K,
                           double tau) {
    const double C = impulse_strength(r_K, gamma_H0, tau);
    return basic_offspring_number(p) >
           rhs_product(p, C, 1.0 / (1.0 - gamma_H0));
}

bool extinction_condition(const BioParams& p, double gamma_H0, double r_K,
                          double tau) {
    const double C = impulse_strength(r_K, gamma_H0, tau);
    return basic_offspring_number(p) <= rhs_product(p, C, 1.0);
}

ControlledVerdict classify_controlled(const BioParams& p, double gamma_H0,
                                      double r_K, double tau) {
    p.validate();
    const double C = impulse_strength(r_K, gamma_H0, tau);
    ControlledVerdict v;
    v.C = C;
    v.lhs = basic_offspring_number(p);
    v.rhs_persist = rhs_product(p, C, 1.0 / (1.0 - gamma_H0));
    v.rhs_extinct = rhs_product(p, C, 1.0);
    v.rhs_extinct_damped = rhs_product(p, C, std::exp(-r_K * tau));
    if (v.lhs > v.rhs_persist)
        v.kind = ControlledVerdict::Kind::PeriodicPersistence;
    else if (v.lhs <= v.rhs_extinct)
        v.kind = ControlledVerdict::Kind::Extinction;
    else
        v.kind = ControlledVerdict::Kind::Indeterminate;
    return v;
}

}  // namespace vectorsim
