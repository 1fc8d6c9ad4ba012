#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "vectorsim/behavior.hpp"

using namespace vectorsim;

namespace {

BehaviorParams survey_params() {
    return {0.6, 1.2, 103.0, 14.8, 50.0, 3, 200000.0, 0};
}

// Independent tail oracle: per-term Poisson pmf through lgamma.
double poisson_tail_oracle(double lambda, int k) {
    if (k == 0) return 1.0;
    if (lambda == 0.0) return 0.0;
    double cum = 0.0;
    for (int i = 0; i < k; ++i)
        cum += std::exp(-lambda + i * std::log(lambda) - std::lgamma(i + 1.0));
    return 1.0 - cum;
}

}  // namespace

TEST_CASE("marginal utility") {
    CHECK(marginal_utility(0.7, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(marginal_utility(1.0, 40.0) == doctest::Approx(1.0 / 40.0).epsilon(1e-14));
    // 103^(-1.2)
    CHECK(marginal_utility(1.2, 103.0) ==
          doctest::Approx(3.8423359159808687e-3).epsilon(1e-12));
    CHECK(marginal_utility(1.2, 103.0) * std::pow(103.0, 1.2) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(marginal_utility(0.0, 103.0), std::domain_error);
    CHECK_THROWS_AS(marginal_utility(1.2, 0.0), std::domain_error);
}

TEST_CASE("bite probability") {
    CHECK(bite_probability(12345.0, 1000.0, 0) == 1.0);
    CHECK(bite_probability(0.0, 1000.0, 3) == 0.0);
    CHECK(bite_probability(3000.0, 1000.0, 3) ==
          doctest::Approx(0.57680991887315648).epsilon(1e-12));

    SUBCASE("matches the brute-force tail on a grid") {
        for (int li = 0; li <= 40; ++li) {
            const double lambda = 0.5 * li;
            for (int k = 0; k <= 15; ++k) {
                const double got = bite_probability(lambda * 1000.0, 1000.0, k);
                CHECK(std::abs(got - poisson_tail_oracle(lambda, k)) <= 1e-12);
            }
        }
    }
    SUBCASE("monotone in the bite rate and in the tolerance") {
        for (int k = 0; k <= 15; ++k) {
            double prev = -1.0;
            for (int li = 0; li <= 40; ++li) {
                const double v = bite_probability(0.5 * li * 1000.0, 1000.0, k);
                CHECK(v >= prev);
                prev = v;
            }
        }
        for (int li = 0; li <= 40; ++li) {
            double prev = 2.0;
            for (int k = 0; k <= 15; ++k) {
                const double v = bite_probability(0.5 * li * 1000.0, 1000.0, k);
                CHECK(v <= prev);
                prev = v;
            }
        }
    }
}

TEST_CASE("participation threshold") {
    BehaviorParams bp = survey_params();
    CHECK(participation_threshold(0.0, bp) == 0.0);

    SUBCASE("fully subsidized external intervention changes nothing") {
        bp.kappa_1 = 0.0;
        BehaviorParams ext = bp;
        ext.s_e = 1;
        for (double pi : {0.0, 0.3, 1.0})
            CHECK(participation_threshold(pi, bp) == participation_threshold(pi, ext));
    }
    SUBCASE("external support raises the threshold") {
        BehaviorParams ext = bp;
        ext.s_e = 1;
        for (double pi : {0.0, 0.3, 1.0})
            CHECK(participation_threshold(pi, ext) >
                  participation_threshold(pi, bp) + 1.0);
    }
    SUBCASE("full perceived risk, survey cost constants") {
        // with W = income^(-1.2) = 3.84234e-3
        CHECK(participation_threshold(1.0, bp) ==
              doctest::Approx(10.551014129692870).epsilon(1e-12));
        // with W pinned to 3.8456e-3 through the income field
        BehaviorParams pinned = bp;
        pinned.income = std::pow(3.8456e-3, -1.0 / 1.2);
        CHECK(participation_threshold(1.0, pinned) ==
              doctest::Approx(10.542058596978505).epsilon(1e-10));
    }
    CHECK_THROWS_AS(participation_threshold(-0.1, bp), std::domain_error);
    CHECK_THROWS_AS(participation_threshold(1.1, bp), std::domain_error);
}

TEST_CASE("participation rate") {
    BehaviorParams bp = survey_params();
    const ParticipationDist dist{bp.u_c / (bp.marginal_utility() * bp.kappa_0)};

    SUBCASE("no perceived risk leaves half the population acting") {
        CHECK(participation_rate(0.0, bp, dist) == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("an arbitrarily cheap decision is adopted by everyone") {
        BehaviorParams ext = bp;
        ext.s_e = 1;
        ext.kappa_1 = 1e7;  // threshold far in the upper tail
        CHECK(participation_rate(1.0, ext, dist) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("nondecreasing in the bite probability") {
        for (int se : {0, 1}) {
            BehaviorParams p = bp;
            p.s_e = se;
            double prev = -1.0;
            for (int i = 0; i <= 100; ++i) {
                const double H = participation_rate(i / 100.0, p, dist);
                CHECK(H >= prev);
                CHECK(H > 0.0);
                CHECK(H < 1.0);
                prev = H;
            }
        }
    }
    SUBCASE("external intervention raises participation") {
        BehaviorParams ext = bp;
        ext.s_e = 1;
        for (double pi : {0.0, 0.25, 0.5, 1.0})
            CHECK(participation_rate(pi, ext, dist) > participation_rate(pi, bp, dist));
    }
    SUBCASE("agrees with individual adoption decisions on random draws") {
        std::mt19937_64 rng(123456);
        std::normal_distribution<double> draw(0.0, dist.scale);
        const double W = bp.marginal_utility();
        for (int se : {0, 1}) {
            BehaviorParams p = bp;
            p.s_e = se;
            for (double pi : {0.1, 0.6, 0.95}) {
                const double thr = participation_threshold(pi, p);
                for (int i = 0; i < 10000; ++i) {
                    const double s = draw(rng);
                    const bool adopts = pi * p.u_c >= (p.kappa_0 * s - p.kappa_1 * se) * W;
                    CHECK(adopts == (s <= thr));
                }
            }
        }
    }
    SUBCASE("matches a Monte-Carlo estimate of the adopting share") {
        std::mt19937_64 rng(987654321);
        std::normal_distribution<double> draw(0.0, dist.scale);
        const int n = 1000000;
        for (double pi : {0.2, 0.6, 1.0}) {
            for (double k1 : {0.0, 50.0, 100.0}) {
                BehaviorParams p = bp;
                p.kappa_1 = k1;
                p.s_e = 1;
                const double thr = participation_threshold(pi, p);
                int count = 0;
                for (int i = 0; i < n; ++i)
                    if (draw(rng) <= thr) ++count;
                const double mc = static_cast<double>(count) / n;
                const double H = participation_rate(pi, p, dist);
                const double se3 = 3.0 * std::sqrt(std::max(H * (1.0 - H), 1e-12) / n);
                CHECK(std::abs(H - mc) <= se3);
            }
        }
    }
}

TEST_CASE("efficacy") {
    const EfficacyFn lin{EfficacyKind::Linear, 0.5};
    const EfficacyFn sig1{EfficacyKind::Sigmoid, 1.0};
    CHECK(efficacy(0.0, lin) == 0.0);
    CHECK(efficacy(0.0, sig1) == 0.0);
    CHECK(efficacy(1.0, lin) == 0.5);
    CHECK(efficacy(1.0, sig1) == doctest::Approx(0.5).epsilon(1e-15));

    SUBCASE("stays below one and never decreases") {
        for (const EfficacyFn& fn :
             {lin, sig1, EfficacyFn{EfficacyKind::Sigmoid, 25.0},
              EfficacyFn{EfficacyKind::Linear, 0.999}}) {
            double prev = -1.0;
            for (int i = 0; i <= 100; ++i) {
                const double g = efficacy(i / 100.0, fn);
                CHECK(g < 1.0);
                CHECK(g >= prev);
                prev = g;
            }
        }
    }
    SUBCASE("validation enforces the admissible rate ranges") {
        CHECK_THROWS_AS((EfficacyFn{EfficacyKind::Linear, 1.0}.validate()),
                        std::domain_error);
        CHECK_THROWS_AS((EfficacyFn{EfficacyKind::Linear, 0.0}.validate()),
                        std::domain_error);
        CHECK_THROWS_AS((EfficacyFn{EfficacyKind::Sigmoid, 0.0}.validate()),
                        std::domain_error);
        CHECK_NOTHROW((EfficacyFn{EfficacyKind::Linear, 0.99}.validate()));
        CHECK_NOTHROW((EfficacyFn{EfficacyKind::Sigmoid, 25.0}.validate()));
    }
    CHECK_THROWS_AS(efficacy(-0.1, lin), std::domain_error);
    CHECK_THROWS_AS(efficacy(1.1, lin), std::domain_error);
}

TEST_CASE("behavior parameter validation") {
    CHECK_NOTHROW(survey_params().validate());
    auto bad = survey_params();
    bad.u_c = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = survey_params();
    bad.u_c = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = survey_params();
    bad.k_tol = -1;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = survey_params();
    bad.kappa_0 = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = survey_params();
    bad.N_h = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    CHECK_THROWS_AS((ParticipationDist{0.0}.validate()), std::domain_error);
}
