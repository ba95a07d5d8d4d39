#include "crossdiff/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "crossdiff/errors.hpp"

namespace crossdiff {

Mesh::Mesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) {
        throw std::invalid_argument("Mesh: need at least 2 nodes");
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!std::isfinite(nodes_[i])) {
            throw std::invalid_argument("Mesh: nodes must be finite");
        }
        if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
            throw std::invalid_argument("Mesh: nodes must be strictly increasing");
        }
    }
    sizes_.resize(nodes_.size() - 1);
    for (std::size_t j = 0; j + 1 < nodes_.size(); ++j) {
        sizes_[j] = nodes_[j + 1] - nodes_[j];
    }
    weights_.assign(nodes_.size(), 0.0);
    for (std::size_t j = 0; j < sizes_.size(); ++j) {
        weights_[j] += 0.5 * sizes_[j];
        weights_[j + 1] += 0.5 * sizes_[j];
    }
}

Mesh Mesh::uniform(double left, double right, std::size_t node_count) {
    if (node_count < 2) {
        throw std::invalid_argument("Mesh::uniform: need at least 2 nodes");
    }
    if (!(right > left)) {
        throw std::invalid_argument("Mesh::uniform: right must exceed left");
    }
    std::vector<double> nodes(node_count);
    const double h = (right - left) / static_cast<double>(node_count - 1);
    for (std::size_t i = 0; i < node_count; ++i) {
        nodes[i] = left + static_cast<double>(i) * h;
    }
    nodes.back() = right;  // avoid drift in the last node
    return Mesh(std::move(nodes));
}

bool Mesh::is_uniform(double rel_tol) const {
    const double h0 = sizes_.front();
    for (double h : sizes_) {
        if (std::abs(h - h0) > rel_tol * h0) {
            return false;
        }
    }
    return true;
}

double Mesh::spacing() const {
    if (!is_uniform()) {
        throw std::invalid_argument("Mesh::spacing: mesh is not uniform");
    }
    return (right() - left()) / static_cast<double>(element_count());
}

MeshPtr make_uniform_mesh(double left, double right, std::size_t node_count) {
    return std::make_shared<const Mesh>(Mesh::uniform(left, right, node_count));
}

NodalField::NodalField(MeshPtr mesh, std::vector<double> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
    if (!mesh_) {
        throw std::invalid_argument("NodalField: null mesh");
    }
    if (values_.size() != mesh_->node_count()) {
        throw std::invalid_argument("NodalField: value count does not match node count");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("NodalField: values must be finite");
        }
    }
}

NodalField NodalField::zero(MeshPtr mesh) {
    std::vector<double> values(mesh ? mesh->node_count() : 0, 0.0);
    return NodalField(std::move(mesh), std::move(values));
}

NodalField NodalField::constant(MeshPtr mesh, double value) {
    std::vector<double> values(mesh ? mesh->node_count() : 0, value);
    return NodalField(std::move(mesh), std::move(values));
}

double NodalField::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double NodalField::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

bool same_mesh(const NodalField& a, const NodalField& b) {
    if (a.mesh() == b.mesh()) {
        return true;
    }
    const auto& na = a.mesh()->nodes();
    const auto& nb = b.mesh()->nodes();
    return na.size() == nb.size() && std::equal(na.begin(), na.end(), nb.begin());
}

void require_same_mesh(const NodalField& a, const NodalField& b) {
    if (!same_mesh(a, b)) {
        throw MeshMismatchError("fields live on different meshes");
    }
}

namespace {

template <typename Op>
NodalField nodewise(const NodalField& a, const NodalField& b, Op op) {
    require_same_mesh(a, b);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = op(a[i], b[i]);
    }
    return NodalField(a.mesh(), std::move(out));
}

}  // namespace

NodalField add(const NodalField& a, const NodalField& b) {
    return nodewise(a, b, [](double x, double y) { return x + y; });
}

NodalField subtract(const NodalField& a, const NodalField& b) {
    return nodewise(a, b, [](double x, double y) { return x - y; });
}

NodalField multiply(const NodalField& a, const NodalField& b) {
    return nodewise(a, b, [](double x, double y) { return x * y; });
}

double max_abs_diff(const NodalField& a, const NodalField& b) {
    require_same_mesh(a, b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace crossdiff
