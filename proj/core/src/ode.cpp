#include "crossdiff/ode.hpp"

#include <cmath>
#include <stdexcept>

namespace crossdiff {

namespace {

constexpr double kPointMatchTol = 1e-12;

// One classical RK4 step for an autonomous 2-system; the scalar case uses
// component 0 only.
template <typename Rhs>
std::array<double, 2> rk4_step(const std::array<double, 2>& y, double dt, Rhs rhs) {
    const auto k1 = rhs(y);
    const auto at = [&](const std::array<double, 2>& k, double c) {
        return std::array<double, 2>{y[0] + c * dt * k[0], y[1] + c * dt * k[1]};
    };
    const auto k2 = rhs(at(k1, 0.5));
    const auto k3 = rhs(at(k2, 0.5));
    const auto k4 = rhs(at(k3, 1.0));
    return {y[0] + dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            y[1] + dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

void check_finite(const std::array<double, 2>& y, double t) {
    if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
        throw std::runtime_error("ode: trajectory blew up near t = " + std::to_string(t));
    }
}

long step_count(double span, double dt) {
    return static_cast<long>(std::ceil(span / dt - 1e-12));
}

}  // namespace

ScalarSeries simulate_logistic(double alpha, double beta, double u0, double t_end, double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("simulate_logistic: dt must be positive");
    }
    if (!(u0 > 0.0)) {
        throw std::invalid_argument("simulate_logistic: u0 must be positive");
    }
    if (t_end < 0.0) {
        throw std::invalid_argument("simulate_logistic: t_end must be nonnegative");
    }
    const auto rhs = [&](const std::array<double, 2>& y) {
        return std::array<double, 2>{y[0] * (alpha - beta * y[0]), 0.0};
    };
    ScalarSeries series;
    std::array<double, 2> y{u0, 0.0};
    double t = 0.0;
    series.time.push_back(t);
    series.value.push_back(y[0]);
    const long n = step_count(t_end, dt);
    for (long k = 0; k < n; ++k) {
        const double step = std::min(dt, t_end - t);
        y = rk4_step(y, step, rhs);
        t = (k + 1 == n) ? t_end : t + step;
        check_finite(y, t);
        series.time.push_back(t);
        series.value.push_back(y[0]);
    }
    return series;
}

void SplitScenario::validate() const {
    if (!(u0 > 0.0)) {
        throw std::invalid_argument("SplitScenario: u0 must be positive");
    }
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw std::invalid_argument("SplitScenario: theta must lie in [0, 1]");
    }
    if (!(t_star >= 0.0) || !(t_star < t_end)) {
        throw std::invalid_argument("SplitScenario: need 0 <= t_star < t_end");
    }
    post.validate();
}

PairSeries simulate_split(const SplitScenario& scenario, double dt) {
    scenario.validate();
    if (!(dt > 0.0)) {
        throw std::invalid_argument("simulate_split: dt must be positive");
    }
    PairSeries series;
    const auto push = [&](double t, double a, double b) {
        series.time.push_back(t);
        series.u1.push_back(a);
        series.u2.push_back(b);
    };

    // Pre-split phase: total population follows the logistic law; columns
    // carry the prospective shares.
    const auto pre = simulate_logistic(scenario.alpha_pre, scenario.beta_pre, scenario.u0,
                                       scenario.t_star, dt);
    for (std::size_t i = 0; i < pre.time.size(); ++i) {
        push(pre.time[i], scenario.theta * pre.value[i], (1.0 - scenario.theta) * pre.value[i]);
    }

    const auto& p = scenario.post;
    const auto rhs = [&](const std::array<double, 2>& y) {
        return std::array<double, 2>{reaction_rate(1, y[0], y[1], p),
                                     reaction_rate(2, y[0], y[1], p)};
    };
    std::array<double, 2> y{series.u1.back(), series.u2.back()};
    double t = scenario.t_star;
    const long n = step_count(scenario.t_end - scenario.t_star, dt);
    for (long k = 0; k < n; ++k) {
        const double step = std::min(dt, scenario.t_end - t);
        y = rk4_step(y, step, rhs);
        t = (k + 1 == n) ? scenario.t_end : t + step;
        check_finite(y, t);
        push(t, y[0], y[1]);
    }
    return series;
}

namespace {

void add_point(EquilibriumSet& set, double a, double b) {
    for (const auto& q : set.points) {
        if (std::abs(q[0] - a) <= kPointMatchTol && std::abs(q[1] - b) <= kPointMatchTol) {
            return;
        }
    }
    set.points.push_back({a, b});
}

}  // namespace

EquilibriumSet equilibria(const LotkaVolterraParams& p) {
    p.validate();
    EquilibriumSet set;
    add_point(set, 0.0, 0.0);

    if (p.mode == CompetitionMode::NonDifferentiated) {
        const double beta = p.beta[0][0];
        if (beta != 0.0) {
            set.has_continuum = true;
            set.continuum_level = p.alpha[0] / beta;
        }
        return set;
    }

    // Boundary equilibria: the surviving species sits at its own carrying
    // capacity while the other is extinct.
    if (p.beta[0][0] != 0.0) {
        const double u1 = p.alpha[0] / p.beta[0][0];
        if (u1 >= 0.0) {
            add_point(set, u1, 0.0);
        }
    }
    if (p.beta[1][1] != 0.0) {
        const double u2 = p.alpha[1] / p.beta[1][1];
        if (u2 >= 0.0) {
            add_point(set, 0.0, u2);
        }
    }

    const double det = p.beta[0][0] * p.beta[1][1] - p.beta[0][1] * p.beta[1][0];
    if (det == 0.0) {
        set.degenerate_interior = true;
        return set;
    }
    const double u1 = (p.alpha[0] * p.beta[1][1] - p.alpha[1] * p.beta[0][1]) / det;
    const double u2 = (p.alpha[1] * p.beta[0][0] - p.alpha[0] * p.beta[1][0]) / det;
    if (u1 >= 0.0 && u2 >= 0.0) {
        add_point(set, u1, u2);
    }
    return set;
}

}  // namespace crossdiff
