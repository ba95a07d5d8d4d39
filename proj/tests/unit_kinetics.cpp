#include <cmath>
#include <random>

#include <stdexcept>
#include "doctest.h"

#include "crossdiff/kinetics.hpp"

using namespace crossdiff;

namespace {

// Experiment-1 coefficients: alpha_i = 1, beta_ij = i.
LotkaVolterraParams invasion_lv() {
    return LotkaVolterraParams::differentiated(1.0, 1.0, 1.0, 1.0, 2.0, 2.0);
}

// Quotient-form oracle for the ratio reaction, valid away from r in {0, 1}.
double ratio_quotient(double u, double r, const LotkaVolterraParams& p) {
    const double u1 = r * u;
    const double u2 = (1.0 - r) * u;
    return r * (1.0 - r) *
           (reaction_rate(1, u1, u2, p) / u1 - reaction_rate(2, u1, u2, p) / u2);
}

}  // namespace

TEST_CASE("reaction rates") {
    const auto p = invasion_lv();
    CHECK(reaction_rate(1, 0.5, 0.5, p) == doctest::Approx(0.0));
    CHECK(reaction_rate(2, 0.5, 0.5, p) == doctest::Approx(-0.5));
    CHECK(reaction_rate(1, 0.0, 0.7, p) == 0.0);
    CHECK(reaction_rate(2, 0.7, 0.0, p) == 0.0);

    const auto nd = LotkaVolterraParams::non_differentiated(1.0, 1.0);
    CHECK(reaction_rate(1, 0.25, 0.75, nd) == doctest::Approx(0.0));

    CHECK_THROWS_AS(reaction_rate(3, 0.1, 0.1, p), std::invalid_argument);
}

TEST_CASE("total reaction") {
    const auto p = invasion_lv();
    CHECK(total_reaction(1.0, 0.0, p) == doctest::Approx(0.0));  // boundary equilibrium
    const auto nd = LotkaVolterraParams::non_differentiated(1.0, 1.0);
    CHECK(total_reaction(0.4, 0.6, nd) == doctest::Approx(0.0));
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(0.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double u1 = dist(rng);
        const double u2 = dist(rng);
        CHECK(total_reaction(u1, u2, p) ==
              doctest::Approx(reaction_rate(1, u1, u2, p) + reaction_rate(2, u1, u2, p)));
    }
}

TEST_CASE("ratio reactions at the endpoints") {
    const auto p = invasion_lv();
    const double u = 0.8;
    const auto at0 = ratio_reactions(u, 0.0, p);
    CHECK(at0.ratio == 0.0);
    CHECK(at0.total == doctest::Approx(reaction_rate(2, 0.0, u, p)));
    const auto at1 = ratio_reactions(u, 1.0, p);
    CHECK(at1.ratio == 0.0);
    CHECK(at1.total == doctest::Approx(reaction_rate(1, u, 0.0, p)));

    CHECK_THROWS_AS(ratio_reactions(0.0, 0.5, p), std::invalid_argument);
    CHECK_THROWS_AS(ratio_reactions(-1.0, 0.5, p), std::invalid_argument);
}

TEST_CASE("ratio reactions against the quotient oracle") {
    const auto p = invasion_lv();
    // u = 1, r = 1/2: f1 = 0, f2 = -1/2, so total = -1/2 and the quotient
    // form gives 0.25 * (0 - (-1)) = 0.25.
    const auto rr = ratio_reactions(1.0, 0.5, p);
    CHECK(rr.total == doctest::Approx(-0.5));
    CHECK(rr.ratio == doctest::Approx(0.25));
    CHECK(rr.ratio == doctest::Approx(ratio_quotient(1.0, 0.5, p)));

    std::mt19937 rng(17);
    std::uniform_real_distribution<double> udist(0.1, 3.0);
    std::uniform_real_distribution<double> rdist(0.05, 0.95);
    for (int trial = 0; trial < 100; ++trial) {
        const double u = udist(rng);
        const double r = rdist(rng);
        const auto got = ratio_reactions(u, r, p);
        CHECK(got.total == doctest::Approx(total_reaction(r * u, (1.0 - r) * u, p))
                               .epsilon(1e-13));
        CHECK(got.ratio == doctest::Approx(ratio_quotient(u, r, p)).epsilon(1e-12));
        // Cross-multiplied identity, computable without division:
        // ratio * (ru)((1-r)u) = r(1-r) [ (1-r)u f1 - ru f2 ].
        const double u1 = r * u;
        const double u2 = (1.0 - r) * u;
        const double lhs = got.ratio * u1 * u2;
        const double rhs = r * (1.0 - r) *
                           (u2 * reaction_rate(1, u1, u2, p) - u1 * reaction_rate(2, u1, u2, p));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("parameter validation") {
    const auto nd = LotkaVolterraParams::non_differentiated(1.0, 2.0);
    CHECK(nd.alpha[0] == nd.alpha[1]);
    CHECK(nd.beta[0][0] == nd.beta[1][1]);

    LotkaVolterraParams broken = nd;
    broken.beta[1][1] = 3.0;
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);

    CHECK(LotkaVolterraParams::none().is_zero());
}

TEST_CASE("drift field defaults to zero") {
    const DriftField none;
    CHECK(none.is_zero());
    CHECK(none(0.3, -1.2) == 0.0);

    const DriftField q([](double, double x) { return x; });
    CHECK_FALSE(q.is_zero());
    CHECK(q(0.0, 0.5) == 0.5);
}
