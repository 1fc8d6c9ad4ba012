#ifndef VECTORSIM_BEHAVIOR_HPP
#define VECTORSIM_BEHAVIOR_HPP

namespace vectorsim {

// Economic layer of the household decision to perform mechanical control.
//
// A household with cost proclivity s adopts control when the expected utility
// loss from bites outweighs the utility cost of acting:
//     pi * u_c >= (kappa_0*s - kappa_1*s_e) * W
// i.e. iff s <= participation_threshold(pi). The kappa_1 term enters as
// support: while an external agency intervenes (s_e = 1) the effective cost
// of acting drops, so the adoption threshold rises and participation grows.
struct BehaviorParams {
    double u_c;      // utility gap between not-bitten and bitten, in (0,1]
    double beta;     // relative risk-aversion exponent
    double income;   // daily income [euro]
    double kappa_0;  // local (own-effort) cost constant [euro]
    double kappa_1;  // external intervention cost constant [euro]
    int k_tol;       // bite count a person tolerates per day
    double N_h;      // human population
    int s_e = 0;     // external intervention active {0,1}

    void validate() const;
    double marginal_utility() const;  // W = income^(-beta)
};

double marginal_utility(double beta, double income);

// P(X >= k_tol) for X ~ Poisson(A_v/N_h): the chance of suffering at least
// k_tol bites per day. k_tol = 0 gives 1.
double bite_probability(double A_v, double N_h, int k_tol);

// Adoption threshold on the cost proclivity s:
//   s_e = 0:  (1/kappa_0) * pi*u_c/W
//   s_e = 1:  (1/kappa_0) * (pi*u_c/W + kappa_1)
double participation_threshold(double pi, const BehaviorParams& bp);

// Cost-proclivity distribution: zero-mean normal with the given standard
// deviation. F(0) = 1/2.
struct ParticipationDist {
    double scale;  // standard deviation, > 0

    double cdf(double x) const;
    void validate() const;
};

// Share of households adopting mechanical control:
//   H = P(s <= threshold) = F(participation_threshold(pi, bp))
// Strictly inside (0,1) for finite thresholds; nondecreasing in pi.
double participation_rate(double pi, const BehaviorParams& bp,
                          const ParticipationDist& dist);

enum class EfficacyKind { Linear, Sigmoid };

// Fraction of breeding sites destroyed when a share H of households acts.
//   Linear:  gamma = a*H          with 0 < a < 1
//   Sigmoid: gamma = a*H/(1+a*H)  with a > 0
// Both satisfy gamma(0) = 0, gamma nondecreasing, gamma < 1 on [0,1].
struct EfficacyFn {
    EfficacyKind kind = EfficacyKind::Sigmoid;
    double a = 2.0;  // rate of efficacy

    void validate() const;
    double operator()(double H) const;
};

double efficacy(double H, const EfficacyFn& fn);

}  // namespace vectorsim

#endif
