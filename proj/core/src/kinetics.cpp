#include "crossdiff/kinetics.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace crossdiff {

LotkaVolterraParams LotkaVolterraParams::non_differentiated(double alpha, double beta) {
    LotkaVolterraParams p;
    p.alpha = {alpha, alpha};
    p.beta = {{{beta, beta}, {beta, beta}}};
    p.mode = CompetitionMode::NonDifferentiated;
    p.validate();
    return p;
}

LotkaVolterraParams LotkaVolterraParams::differentiated(double alpha1, double alpha2,
                                                        double beta11, double beta12,
                                                        double beta21, double beta22) {
    LotkaVolterraParams p;
    p.alpha = {alpha1, alpha2};
    p.beta = {{{beta11, beta12}, {beta21, beta22}}};
    p.mode = CompetitionMode::Differentiated;
    p.validate();
    return p;
}

LotkaVolterraParams LotkaVolterraParams::none() {
    return differentiated(0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
}

bool LotkaVolterraParams::is_zero() const {
    return alpha[0] == 0.0 && alpha[1] == 0.0 && beta[0][0] == 0.0 && beta[0][1] == 0.0 &&
           beta[1][0] == 0.0 && beta[1][1] == 0.0;
}

void LotkaVolterraParams::validate() const {
    for (double a : alpha) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("LotkaVolterraParams: non-finite alpha");
        }
    }
    for (const auto& row : beta) {
        for (double b : row) {
            if (!std::isfinite(b)) {
                throw std::invalid_argument("LotkaVolterraParams: non-finite beta");
            }
        }
    }
    if (mode == CompetitionMode::NonDifferentiated) {
        const bool equal = alpha[0] == alpha[1] && beta[0][0] == beta[0][1] &&
                           beta[0][0] == beta[1][0] && beta[0][0] == beta[1][1];
        if (!equal) {
            throw std::invalid_argument(
                "LotkaVolterraParams: non-differentiated mode requires equal coefficients");
        }
    }
}

double reaction_rate(int species, double u1, double u2, const LotkaVolterraParams& p) {
    if (species != 1 && species != 2) {
        throw std::invalid_argument("reaction_rate: species must be 1 or 2");
    }
    const std::size_t i = static_cast<std::size_t>(species - 1);
    const double ui = species == 1 ? u1 : u2;
    return ui * (p.alpha[i] - (p.beta[i][0] * u1 + p.beta[i][1] * u2));
}

double total_reaction(double u1, double u2, const LotkaVolterraParams& p) {
    return reaction_rate(1, u1, u2, p) + reaction_rate(2, u1, u2, p);
}

RatioReactions ratio_reactions(double u, double r, const LotkaVolterraParams& p) {
    if (!(u > 0.0)) {
        throw std::invalid_argument("ratio_reactions: total density must be positive");
    }
    const double u1 = r * u;
    const double u2 = (1.0 - r) * u;
    const double bracket1 = p.alpha[0] - (p.beta[0][0] * u1 + p.beta[0][1] * u2);
    const double bracket2 = p.alpha[1] - (p.beta[1][0] * u1 + p.beta[1][1] * u2);
    RatioReactions out;
    out.total = u1 * bracket1 + u2 * bracket2;
    out.ratio = r * (1.0 - r) * (bracket1 - bracket2);
    return out;
}

DriftField::DriftField(std::function<double(double, double)> q) : q_(std::move(q)) {
    if (!q_) {
        throw std::invalid_argument("DriftField: null drift function");
    }
}

double DriftField::operator()(double t, double x) const {
    return q_ ? q_(t, x) : 0.0;
}

}  // namespace crossdiff
