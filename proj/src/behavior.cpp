#include "vectorsim/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vectorsim {

void BehaviorParams::validate() const {
    if (!std::isfinite(u_c) || u_c <= 0.0 || u_c > 1.0)
        throw std::domain_error("BehaviorParams.u_c must lie in (0,1]");
    if (!std::isfinite(beta) || beta <= 0.0)
        throw std::domain_error("BehaviorParams.beta must be > 0");
    if (!std::isfinite(income) || income <= 0.0)
        throw std::domain_error("BehaviorParams.income must be > 0");
    if (!std::isfinite(kappa_0) || kappa_0 <= 0.0)
        throw std::domain_error("BehaviorParams.kappa_0 must be > 0");
    if (!std::isfinite(kappa_1) || kappa_1 < 0.0)
        throw std::domain_error("BehaviorParams.kappa_1 must be >= 0");
    if (k_tol < 0) throw std::domain_error("BehaviorParams.k_tol must be >= 0");
    if (!std::isfinite(N_h) || N_h <= 0.0)
        throw std::domain_error("BehaviorParams.N_h must be > 0");
    if (s_e != 0 && s_e != 1)
        throw std::domain_error("BehaviorParams.s_e must be 0 or 1");
}

double marginal_utility(double beta, double income) {
    if (!(beta > 0.0) || !(income > 0.0))
        throw std::domain_error("marginal_utility: requires beta > 0, income > 0");
    return std::exp(-beta * std::log(income));
}

double BehaviorParams::marginal_utility() const {
    return vectorsim::marginal_utility(beta, income);
}

double bite_probability(double A_v, double N_h, int k_tol) {
    if (!std::isfinite(A_v) || A_v < 0.0)
        throw std::domain_error("bite_probability: A_v must be >= 0");
    if (!(N_h > 0.0)) throw std::domain_error("bite_probability: N_h must be > 0");
    if (k_tol < 0) throw std::domain_error("bite_probability: k_tol must be >= 0");
    if (k_tol == 0) return 1.0;
    const double lambda = A_v / N_h;
    double term = std::exp(-lambda);  // pmf(0)
    double cum = term;
    for (int i = 1; i < k_tol; ++i) {
        term *= lambda / i;
        cum += term;
    }
    return std::clamp(1.0 - cum, 0.0, 1.0);
}

double participation_threshold(double pi, const BehaviorParams& bp) {
    if (!(pi >= 0.0 && pi <= 1.0))
        throw std::domain_error("participation_threshold: pi must lie in [0,1]");
    const double W = bp.marginal_utility();
    const double base = pi * bp.u_c / W;
    return (base + (bp.s_e == 1 ? bp.kappa_1 : 0.0)) / bp.kappa_0;
}

void ParticipationDist::validate() const {
    if (!std::isfinite(scale) || scale <= 0.0)
        throw std::domain_error("ParticipationDist.scale must be > 0");
}

double ParticipationDist::cdf(double x) const {
    return 0.5 * std::erfc(-x / (scale * std::sqrt(2.0)));
}

double participation_rate(double pi, const BehaviorParams& bp,
                          const ParticipationDist& dist) {
    return dist.cdf(participation_threshold(pi, bp));
}

void EfficacyFn::validate() const {
    if (kind == EfficacyKind::Linear) {
        if (!std::isfinite(a) || a <= 0.0 || a >= 1.0)
            throw std::domain_error("EfficacyFn: linear rate a must lie in (0,1)");
    } else {
        if (!std::isfinite(a) || a <= 0.0)
            throw std::domain_error("EfficacyFn: sigmoid rate a must be > 0");
    }
}

double EfficacyFn::operator()(double H) const {
    if (!(H >= 0.0 && H <= 1.0))
        throw std::domain_error("efficacy: H must lie in [0,1]");
    if (kind == EfficacyKind::Linear) return a * H;
    return a * H / (1.0 + a * H);
}

double efficacy(double H, const EfficacyFn& fn) { return fn(H); }

}  // namespace vectorsim
