#include "vectorsim/entomology.hpp"

#include <cmath>
#include <stdexcept>

namespace vectorsim {

void BioParams::validate() const {
    if (!std::isfinite(rb) || rb < 0.0)
        throw std::domain_error("BioParams.rb must be finite and >= 0");
    if (!std::isfinite(nu_L) || nu_L <= 0.0)
        throw std::domain_error("BioParams.nu_L must be finite and > 0");
    if (!std::isfinite(mu_L) || mu_L <= 0.0)
        throw std::domain_error("BioParams.mu_L must be finite and > 0");
    if (!std::isfinite(mu_v) || mu_v <= 0.0)
        throw std::domain_error("BioParams.mu_v must be finite and > 0");
}

Derivatives ode_rhs(const MosquitoState& state, const BioParams& p, double K_v) {
    if (!std::isfinite(state.L_v) || !std::isfinite(state.A_v))
        throw std::domain_error("ode_rhs: non-finite state");
    if (!std::isfinite(K_v) || K_v <= 0.0)
        throw std::domain_error("ode_rhs: K_v must be finite and > 0");
    const double dL =
        p.rb * state.A_v * (1.0 - state.L_v / K_v) - (p.nu_L + p.mu_L) * state.L_v;
    const double dA = p.nu_L * state.L_v - p.mu_v * state.A_v;
    return {dL, dA};
}

double basic_offspring_number(const BioParams& p) {
    return p.nu_L * p.rb / ((p.nu_L + p.mu_L) * p.mu_v);
}

std::vector<MosquitoState> equilibria(const BioParams& p, double K_v) {
    if (!std::isfinite(K_v) || K_v <= 0.0)
        throw std::domain_error("equilibria: K_v must be finite and > 0");
    std::vector<MosquitoState> out{{0.0, 0.0}};
    const double N = basic_offspring_number(p);
    if (N > 1.0) {
        const double L = (1.0 - 1.0 / N) * K_v;
        out.push_back({L, p.nu_L / p.mu_v * L});
    }
    return out;
}

RegionBounds invariant_region(const BioParams& p, double K_v) {
    if (!std::isfinite(K_v) || K_v <= 0.0)
        throw std::domain_error("invariant_region: K_v must be finite and > 0");
    return {K_v, p.nu_L / p.mu_v * K_v};
}

Verdict classify_autonomous(const BioParams& p) {
    return basic_offspring_number(p) <= 1.0 ? Verdict::Extinction
                                            : Verdict::Persistence;
}

}  // namespace vectorsim
