#include "crossdiff/exact_solutions.hpp"

#include <cmath>
#include <stdexcept>

#include "crossdiff/fem.hpp"

namespace crossdiff {

void BarenblattParams::validate() const {
    if (!(t_star > 0.0)) {
        throw std::invalid_argument("BarenblattParams: t_star must be positive");
    }
    if (!(half_length > 0.0)) {
        throw std::invalid_argument("BarenblattParams: half_length must be positive");
    }
    if (!(std::abs(x0) < support_radius(0.0, *this))) {
        throw std::invalid_argument(
            "BarenblattParams: x0 must lie inside the initial support");
    }
}

double BarenblattParams::validity_horizon() const {
    // rho(T) = L  <=>  T = (L / sqrt(12))^3 − t_star
    const double T = std::pow(half_length / std::sqrt(12.0), 3.0) - t_star;
    return T;
}

double barenblatt(double t, double x, const BarenblattParams& p) {
    const double theta = t + p.t_star;
    const double s = 1.0 - x * x * std::pow(theta, -2.0 / 3.0) / 12.0;
    return s > 0.0 ? 2.0 * std::pow(theta, -1.0 / 3.0) * s : 0.0;
}

double support_radius(double t, const BarenblattParams& p) {
    return std::sqrt(12.0) * std::cbrt(t + p.t_star);
}

double contact_point(double t, const BarenblattParams& p) {
    return p.x0 * std::cbrt(1.0 + t / p.t_star);
}

SpeciesPair segregated_solution(double t, double x, const BarenblattParams& p) {
    const double b = barenblatt(t, x, p);
    const double eta = contact_point(t, p);
    if (x > eta) {
        return {b, 0.0};
    }
    if (x < eta) {
        return {0.0, b};
    }
    return {0.5 * b, 0.5 * b};
}

std::pair<NodalField, NodalField> invasion_initial(MeshPtr mesh) {
    const auto colony = [](double x) {
        return 0.22 * std::exp(-(x - 0.25) * (x - 0.25) / 0.001);
    };
    NodalField u1 = interpolate(colony, mesh);
    NodalField u2 = interpolate([&](double x) { return 0.45 - colony(x); }, std::move(mesh));
    return {std::move(u1), std::move(u2)};
}

SegregatedInitial contact_inhibition_initial(MeshPtr mesh, const BarenblattParams& p) {
    p.validate();
    std::vector<double> u1(mesh->node_count());
    std::vector<double> u2(mesh->node_count());
    std::vector<double> r(mesh->node_count());
    for (std::size_t i = 0; i < mesh->node_count(); ++i) {
        const double x = mesh->node(i);
        const auto s = segregated_solution(0.0, x, p);
        u1[i] = s.u1;
        u2[i] = s.u2;
        // Sharp-indicator limit of r0 = u10 / (u10 + u20); species 1 sits to
        // the right of the contact point.
        r[i] = x > p.x0 ? 1.0 : (x < p.x0 ? 0.0 : 0.5);
    }
    return {NodalField(mesh, std::move(u1)), NodalField(mesh, std::move(u2)),
            NodalField(std::move(mesh), std::move(r))};
}

}  // namespace crossdiff
