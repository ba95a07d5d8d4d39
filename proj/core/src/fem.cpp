#include "crossdiff/fem.hpp"

#include <cmath>
#include <stdexcept>

namespace crossdiff {

double lumped_product(const NodalField& a, const NodalField& b) {
    require_same_mesh(a, b);
    const auto w = a.mesh()->lumped_weights();
    double sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        sum += w[i] * a[i] * b[i];
    }
    return sum;
}

double lumped_norm(const NodalField& a) {
    return std::sqrt(lumped_product(a, a));
}

NodalField interpolate(const std::function<double(double)>& f, MeshPtr mesh) {
    if (!mesh) {
        throw std::invalid_argument("interpolate: null mesh");
    }
    std::vector<double> values(mesh->node_count());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = f(mesh->node(i));
        if (!std::isfinite(v)) {
            throw std::invalid_argument("interpolate: non-finite value at a node");
        }
        values[i] = v;
    }
    return NodalField(std::move(mesh), std::move(values));
}

std::vector<double> element_gradient(const NodalField& u) {
    const Mesh& mesh = *u.mesh();
    std::vector<double> grad(mesh.element_count());
    for (std::size_t j = 0; j < grad.size(); ++j) {
        grad[j] = (u[j + 1] - u[j]) / mesh.element_size(j);
    }
    return grad;
}

std::vector<double> recovered_gradient(const NodalField& u) {
    const auto g = element_gradient(u);
    std::vector<double> out(u.size());
    out.front() = g.front();
    out.back() = g.back();
    for (std::size_t i = 1; i + 1 < out.size(); ++i) {
        out[i] = 0.5 * (g[i - 1] + g[i]);
    }
    return out;
}

std::vector<double> Tridiagonal::apply(std::span<const double> x) const {
    if (x.size() != diag.size()) {
        throw std::invalid_argument("Tridiagonal::apply: size mismatch");
    }
    std::vector<double> y(x.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = diag[i] * x[i];
        if (i > 0) y[i] += sub[i - 1] * x[i - 1];
        if (i + 1 < x.size()) y[i] += sup[i] * x[i + 1];
    }
    return y;
}

Tridiagonal assemble_weighted_stiffness(std::span<const double> element_weight,
                                        const Mesh& mesh) {
    if (element_weight.size() != mesh.element_count()) {
        throw std::invalid_argument(
            "assemble_weighted_stiffness: one weight per element required");
    }
    Tridiagonal A(mesh.node_count());
    for (std::size_t j = 0; j < element_weight.size(); ++j) {
        const double c = element_weight[j] / mesh.element_size(j);
        A.diag[j] += c;
        A.diag[j + 1] += c;
        A.sub[j] -= c;
        A.sup[j] -= c;
    }
    return A;
}

std::vector<double> assemble_drift_load(std::span<const double> element_weight,
                                        std::span<const double> q_nodes,
                                        const Mesh& mesh) {
    if (element_weight.size() != mesh.element_count()) {
        throw std::invalid_argument("assemble_drift_load: one weight per element required");
    }
    if (q_nodes.size() != mesh.node_count()) {
        throw std::invalid_argument("assemble_drift_load: one drift value per node required");
    }
    std::vector<double> load(mesh.node_count(), 0.0);
    for (std::size_t j = 0; j < element_weight.size(); ++j) {
        const double q_mid = 0.5 * (q_nodes[j] + q_nodes[j + 1]);
        const double c = element_weight[j] * q_mid;
        load[j] -= c;      // ∂_x φ_j = −1/h_j on the element, times h_j q_mid
        load[j + 1] += c;  // ∂_x φ_{j+1} = +1/h_j
    }
    return load;
}

}  // namespace crossdiff
