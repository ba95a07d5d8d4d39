#include "crossdiff/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "crossdiff/fem.hpp"

namespace crossdiff {

namespace {

int sign_of(double d) {
    if (d > 0.0) return 1;
    if (d < 0.0) return -1;
    return 0;
}

}  // namespace

double oscillation(const NodalField& u) {
    const Mesh& mesh = *u.mesh();
    if (!mesh.is_uniform()) {
        throw std::invalid_argument("oscillation: formula requires a uniform mesh");
    }
    const double h = mesh.spacing();
    int prev = sign_of(u[1] - u[0]);
    long total = 0;
    for (std::size_t j = 1; j < mesh.element_count(); ++j) {
        const int s = sign_of(u[j + 1] - u[j]);
        total += std::abs(s - prev);
        prev = s;
    }
    return h * static_cast<double>(total);
}

double relative_l2_error(const NodalField& u, const std::function<double(double)>& exact) {
    const NodalField reference = interpolate(exact, u.mesh());
    const double err = lumped_norm(subtract(u, reference));
    const double denom = lumped_norm(reference);
    if (denom < 1e-14) {
        return err;
    }
    return err / denom;
}

double discrete_mass(const NodalField& u) {
    return lumped_product(u, NodalField::constant(u.mesh(), 1.0));
}

}  // namespace crossdiff
