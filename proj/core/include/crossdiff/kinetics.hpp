#pragma once

#include <array>
#include <functional>

namespace crossdiff {

/// Whether the two split species keep identical Lotka–Volterra coefficients
/// (non-differentiated) or carry their own (differentiated).
enum class CompetitionMode { NonDifferentiated, Differentiated };

/// Growth rates α_i and competition matrix β_ij of the two-species terms
/// f_i(u1, u2) = u_i (α_i − β_{i1} u1 − β_{i2} u2).
struct LotkaVolterraParams {
    std::array<double, 2> alpha{0.0, 0.0};
    std::array<std::array<double, 2>, 2> beta{{{0.0, 0.0}, {0.0, 0.0}}};
    CompetitionMode mode = CompetitionMode::Differentiated;

    /// Both species share alpha and beta; f_i = u_i (α − β (u1 + u2)).
    static LotkaVolterraParams non_differentiated(double alpha, double beta);
    static LotkaVolterraParams differentiated(double alpha1, double alpha2, double beta11,
                                              double beta12, double beta21, double beta22);
    /// No growth, no competition.
    static LotkaVolterraParams none();

    bool is_zero() const;
    void validate() const;
};

/// Reaction rate of species 1 or 2.
double reaction_rate(int species, double u1, double u2, const LotkaVolterraParams& p);

/// Total-density reaction f_1 + f_2.
double total_reaction(double u1, double u2, const LotkaVolterraParams& p);

/// Reaction terms of the total-density/fraction formulation u1 = r u,
/// u2 = (1 − r) u. `total` drives the u-equation, `ratio` the r-equation:
///   total = f_1(ru, (1−r)u) + f_2(ru, (1−r)u)
///   ratio = r(1−r) [ f_1(ru,(1−r)u)/(ru) − f_2(ru,(1−r)u)/((1−r)u) ]
/// The ratio term is evaluated in its cancelled closed form
///   r(1−r) [ (α1 − β11 ru − β12 (1−r)u) − (α2 − β21 ru − β22 (1−r)u) ],
/// which removes the removable singularity of the quotient at r ∈ {0, 1}.
struct RatioReactions {
    double total;
    double ratio;
};

/// Throws std::invalid_argument for u ≤ 0 (degenerate total density).
RatioReactions ratio_reactions(double u, double r, const LotkaVolterraParams& p);

/// Environmental drift q(t, x). Default-constructed drift is identically
/// zero. A nonzero drift must vanish on the domain boundary for all t.
class DriftField {
public:
    DriftField() = default;
    explicit DriftField(std::function<double(double t, double x)> q);

    double operator()(double t, double x) const;
    bool is_zero() const { return !q_; }

private:
    std::function<double(double, double)> q_;
};

}  // namespace crossdiff
