#ifndef VECTORSIM_ENTOMOLOGY_HPP
#define VECTORSIM_ENTOMOLOGY_HPP

#include <vector>

namespace vectorsim {

// Biological constants of the autonomous mosquito model. The sex ratio and
// the per-female egg rate only ever enter as a product, so they are stored
// as one field.
struct BioParams {
    double rb;    // eggs per female per day emerging as larvae (r*b)
    double nu_L;  // aquatic-to-adult transfer rate [1/day]
    double mu_L;  // aquatic death rate [1/day]
    double mu_v;  // adult female death rate [1/day]

    // Throws std::domain_error on non-finite or out-of-range fields.
    // rb = 0 (sterile population) is allowed; the rates must be positive.
    void validate() const;
};

struct MosquitoState {
    double L_v = 0.0;  // aquatic stage (eggs, larvae, pupae) [individuals]
    double A_v = 0.0;  // adult females [individuals]
};

// Upper corner of the positively invariant compact region:
// L_v <= K_v, A_v <= (nu_L/mu_v) * K_v.
struct RegionBounds {
    double L_max;
    double A_max;
};

enum class Verdict { Extinction, Persistence };

struct Derivatives {
    double dL;  // [individuals/day]
    double dA;  // [individuals/day]
};

// Right-hand side of the two-stage model:
//   dL/dt = rb*A*(1 - L/K) - (nu_L + mu_L)*L
//   dA/dt = nu_L*L - mu_v*A
// Throws std::domain_error for non-finite inputs or K_v <= 0.
Derivatives ode_rhs(const MosquitoState& state, const BioParams& p, double K_v);

// Basic offspring number N = nu_L*rb / ((nu_L + mu_L)*mu_v).
double basic_offspring_number(const BioParams& p);

// Equilibria of the autonomous system for a fixed carrying capacity, trivial
// equilibrium first. The positive equilibrium
//   L* = (1 - 1/N)*K_v,  A* = (nu_L/mu_v)*L*
// is present iff N > 1.
std::vector<MosquitoState> equilibria(const BioParams& p, double K_v);

RegionBounds invariant_region(const BioParams& p, double K_v);

// Extinction iff N <= 1 (boundary inclusive), persistence otherwise.
Verdict classify_autonomous(const BioParams& p);

}  // namespace vectorsim

#endif
