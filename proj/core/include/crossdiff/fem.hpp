#pragma once

#include <functional>
#include <span>
#include <vector>

#include "crossdiff/mesh.hpp"

namespace crossdiff {

/// Mass-lumped semi-inner product (a, b)^h = ∫ π^h(a b) = Σ_i w_i a_i b_i.
double lumped_product(const NodalField& a, const NodalField& b);

/// |a|_h = sqrt((a, a)^h).
double lumped_norm(const NodalField& a);

/// Lagrange interpolation of f onto the mesh: value at node i is f(x_i).
/// Throws std::invalid_argument if f is non-finite at a node.
NodalField interpolate(const std::function<double(double)>& f, MeshPtr mesh);

/// Gradient of a P1 field, constant per element: (u_{j+1} − u_j) / h_j.
std::vector<double> element_gradient(const NodalField& u);

/// Nodal gradient recovery: arithmetic mean of the two adjacent element
/// gradients, one-sided at the boundary nodes.
std::vector<double> recovered_gradient(const NodalField& u);

/// Tridiagonal matrix in band form. sub/sup hold the off-diagonals.
struct Tridiagonal {
    explicit Tridiagonal(std::size_t n) : sub(n - 1, 0.0), diag(n, 0.0), sup(n - 1, 0.0) {}

    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> sup;

    std::size_t size() const { return diag.size(); }
    /// y = A x
    std::vector<double> apply(std::span<const double> x) const;
};

/// Stiffness matrix of (w ∂_x u, ∂_x χ) for an elementwise-constant weight w.
/// Element j contributes (w_j / h_j) · [[1, −1], [−1, 1]]; this is exact since
/// both factors are constant per element. Throws on weight/element mismatch.
Tridiagonal assemble_weighted_stiffness(std::span<const double> element_weight,
                                        const Mesh& mesh);

/// Load vector of the drift term (π^h(q) w, ∂_x χ) with elementwise-constant
/// w and nodal drift values q. π^h(q) integrates to its element midpoint value
/// against the constant test gradients, which is exact for the linear factor.
std::vector<double> assemble_drift_load(std::span<const double> element_weight,
                                        std::span<const double> q_nodes,
                                        const Mesh& mesh);

}  // namespace crossdiff
