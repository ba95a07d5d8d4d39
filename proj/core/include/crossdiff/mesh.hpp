#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace crossdiff {

/// Partition of a 1D interval into P1 elements. Immutable after construction,
/// so meshes can be shared freely between fields and threads.
class Mesh {
public:
    /// Nodes must be finite, strictly increasing and at least two.
    explicit Mesh(std::vector<double> nodes);

    /// Uniform mesh with `node_count` nodes on [left, right].
    static Mesh uniform(double left, double right, std::size_t node_count);

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t element_count() const { return nodes_.size() - 1; }

    double node(std::size_t i) const { return nodes_[i]; }
    std::span<const double> nodes() const { return nodes_; }

    double element_size(std::size_t j) const { return sizes_[j]; }
    std::span<const double> element_sizes() const { return sizes_; }

    double left() const { return nodes_.front(); }
    double right() const { return nodes_.back(); }

    /// Lumped mass weights w_i = ∫ φ_i: half-sum of the adjacent element
    /// sizes, a single half element at the boundary nodes.
    std::span<const double> lumped_weights() const { return weights_; }

    bool is_uniform(double rel_tol = 1e-12) const;

    /// Common spacing of a uniform mesh; throws std::invalid_argument otherwise.
    double spacing() const;

private:
    std::vector<double> nodes_;
    std::vector<double> sizes_;
    std::vector<double> weights_;
};

using MeshPtr = std::shared_ptr<const Mesh>;

MeshPtr make_uniform_mesh(double left, double right, std::size_t node_count);

/// Coefficient vector of a continuous piecewise-linear function: one finite
/// value per mesh node. Value type; mutation goes through rebuilding.
class NodalField {
public:
    NodalField(MeshPtr mesh, std::vector<double> values);

    static NodalField zero(MeshPtr mesh);
    static NodalField constant(MeshPtr mesh, double value);

    const MeshPtr& mesh() const { return mesh_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const { return values_; }

    double min_value() const;
    double max_value() const;

private:
    MeshPtr mesh_;
    std::vector<double> values_;
};

/// Fields are compatible when they reference the same mesh object or two
/// meshes with identical nodes.
bool same_mesh(const NodalField& a, const NodalField& b);

/// Throws MeshMismatchError when the fields are not compatible.
void require_same_mesh(const NodalField& a, const NodalField& b);

/// Nodewise sum, difference, product.
NodalField add(const NodalField& a, const NodalField& b);
NodalField subtract(const NodalField& a, const NodalField& b);
NodalField multiply(const NodalField& a, const NodalField& b);

/// max_i |a_i − b_i|.
double max_abs_diff(const NodalField& a, const NodalField& b);

}  // namespace crossdiff
