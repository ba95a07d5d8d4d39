#include "crossdiff/truncation.hpp"

#include <cmath>
#include <stdexcept>

namespace crossdiff {

Epsilon::Epsilon(double value) : value_(value) {
    if (!(value > 0.0) || !(value < 1.0) || !std::isfinite(value)) {
        throw std::invalid_argument("Epsilon: value must lie in (0, 1)");
    }
}

double truncate(double s, Epsilon eps) {
    if (s <= eps.value()) {
        return eps.value();
    }
    if (s >= eps.inverse()) {
        return eps.inverse();
    }
    return s;
}

std::vector<double> midpoint_truncation(const NodalField& z, Epsilon eps) {
    std::vector<double> out(z.mesh()->element_count());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = truncate(0.5 * (z[j] + z[j + 1]), eps);
    }
    return out;
}

}  // namespace crossdiff
