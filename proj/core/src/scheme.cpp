#include "crossdiff/scheme.hpp"

#include <cmath>
#include <stdexcept>

namespace crossdiff {

void SchemeParams::validate() const {
    if (!(tau > 0.0)) {
        throw std::invalid_argument("SchemeParams: tau must be positive");
    }
    if (!(delta >= 0.0)) {
        throw std::invalid_argument("SchemeParams: delta must be nonnegative");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("SchemeParams: tol must be positive");
    }
    if (max_inner < 1) {
        throw std::invalid_argument("SchemeParams: max_inner must be at least 1");
    }
    if (!(t_end >= 0.0)) {
        throw std::invalid_argument("SchemeParams: t_end must be nonnegative");
    }
}

long SchemeParams::step_count() const {
    return std::lround(t_end / tau);
}

}  // namespace crossdiff
