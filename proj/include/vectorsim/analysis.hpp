#ifndef VECTORSIM_ANALYSIS_HPP
#define VECTORSIM_ANALYSIS_HPP

#include "vectorsim/entomology.hpp"

namespace vectorsim {

// Closed-form classification of the controlled system under a constant
// per-period destroyed fraction gamma_H0 every tau days.
struct ControlledVerdict {
    enum class Kind { PeriodicPersistence, Extinction, Indeterminate };
    Kind kind;
    double C;            // impulse strength [1/day]
    double lhs;          // basic offspring number N
    double rhs_persist;  // persistence when lhs > rhs_persist
    double rhs_extinct;  // extinction when lhs <= rhs_extinct
    // Weaker variant of the extinction bound with e^(-r_K*tau)-damped C,
    // reported as a diagnostic only; the verdict uses rhs_extinct.
    double rhs_extinct_damped;
};

// C = r_K * gamma_H0 / (1 - e^(-r_K*tau)). Requires r_K > 0, tau > 0 and
// gamma_H0 in [0,1).
double impulse_strength(double r_K, double gamma_H0, double tau);

// N > (1 + (mu_v/nu_L)*C/(1-g)) * (1 + C/((nu_L+mu_L)*(1-g)))
bool persistence_condition(const BioParams& p, double gamma_H0, double r_K,
                           double tau);

// N <= (1 + (mu_v/nu_L)*C) * (1 + C/(nu_L+mu_L))
bool extinction_condition(const BioParams& p, double gamma_H0, double r_K,
                          double tau);

// The two conditions leave a gap; points inside it are Indeterminate and are
// never forced into a binary answer.
ControlledVerdict classify_controlled(const BioParams& p, double gamma_H0,
                                      double r_K, double tau);

}  // namespace vectorsim

#endif
