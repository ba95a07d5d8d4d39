#include "crossdiff/banded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "crossdiff/errors.hpp"

namespace crossdiff {

BandedMatrix::BandedMatrix(std::size_t n, int bandwidth) : n_(n), b_(bandwidth) {
    if (n_ == 0) {
        throw std::invalid_argument("BandedMatrix: dimension must be positive");
    }
    if (b_ < 1) {
        throw std::invalid_argument("BandedMatrix: bandwidth must be at least 1");
    }
    ldab_ = 3 * b_ + 1;
    store_.assign(static_cast<std::size_t>(ldab_) * n_, 0.0);
}

bool BandedMatrix::in_band(std::size_t i, std::size_t j) const {
    const auto d = static_cast<long>(i) - static_cast<long>(j);
    return i < n_ && j < n_ && d >= -b_ && d <= b_;
}

// Entry (i, j) is addressable whenever it fits the fill-in extended band
// i − j ∈ [−2b, b]; column j occupies rows 2b + (i − j) of its storage column.
bool BandedMatrix::in_storage(std::size_t i, std::size_t j) const {
    const auto d = static_cast<long>(i) - static_cast<long>(j);
    return i < n_ && j < n_ && d >= -2L * b_ && d <= b_;
}

double& BandedMatrix::entry(std::size_t i, std::size_t j) {
    const long r = 2L * b_ + static_cast<long>(i) - static_cast<long>(j);
    return store_[static_cast<std::size_t>(r) + j * static_cast<std::size_t>(ldab_)];
}

double BandedMatrix::entry(std::size_t i, std::size_t j) const {
    const long r = 2L * b_ + static_cast<long>(i) - static_cast<long>(j);
    return store_[static_cast<std::size_t>(r) + j * static_cast<std::size_t>(ldab_)];
}

double BandedMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) {
        throw std::out_of_range("BandedMatrix::at: index out of range");
    }
    return in_storage(i, j) ? entry(i, j) : 0.0;
}

void BandedMatrix::add(std::size_t i, std::size_t j, double value) {
    if (!in_band(i, j)) {
        throw std::out_of_range("BandedMatrix::add: entry outside the band");
    }
    entry(i, j) += value;
}

void BandedMatrix::set(std::size_t i, std::size_t j, double value) {
    if (!in_band(i, j)) {
        throw std::out_of_range("BandedMatrix::set: entry outside the band");
    }
    entry(i, j) = value;
}

// LU with partial pivoting confined to the band (the unblocked LAPACK gbtf2
// scheme). Row interchanges are applied to the active columns only and the
// pivot sequence is replayed during the forward substitution.
std::vector<double> solve_banded_impl(BandedMatrix a, std::vector<double> x) {
    const std::size_t n = a.n_;
    const int b = a.b_;

    double amax = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t ilo = j >= static_cast<std::size_t>(b) ? j - b : 0;
        const std::size_t ihi = std::min(n - 1, j + b);
        for (std::size_t i = ilo; i <= ihi; ++i) {
            amax = std::max(amax, std::abs(a.entry(i, j)));
        }
    }
    const double pivot_floor = 1e-14 * amax;

    std::vector<std::size_t> pivot(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t ihi = std::min(n - 1, j + b);
        std::size_t p = j;
        for (std::size_t i = j + 1; i <= ihi; ++i) {
            if (std::abs(a.entry(i, j)) > std::abs(a.entry(p, j))) {
                p = i;
            }
        }
        pivot[j] = p;
        if (!(std::abs(a.entry(p, j)) > pivot_floor)) {
            throw SingularSystemError("solve_banded: singular or near-singular system");
        }
        const std::size_t chi = std::min(n - 1, j + 2 * static_cast<std::size_t>(b));
        if (p != j) {
            for (std::size_t c = j; c <= chi; ++c) {
                std::swap(a.entry(j, c), a.entry(p, c));
            }
        }
        const double inv_pivot = 1.0 / a.entry(j, j);
        for (std::size_t i = j + 1; i <= ihi; ++i) {
            const double m = a.entry(i, j) * inv_pivot;
            a.entry(i, j) = m;
            if (m != 0.0) {
                for (std::size_t c = j + 1; c <= chi; ++c) {
                    a.entry(i, c) -= m * a.entry(j, c);
                }
            }
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        if (pivot[j] != j) {
            std::swap(x[j], x[pivot[j]]);
        }
        const std::size_t ihi = std::min(n - 1, j + b);
        for (std::size_t i = j + 1; i <= ihi; ++i) {
            x[i] -= a.entry(i, j) * x[j];
        }
    }
    for (std::size_t jj = n; jj-- > 0;) {
        x[jj] /= a.entry(jj, jj);
        const std::size_t ilo = jj >= 2 * static_cast<std::size_t>(b) ? jj - 2 * b : 0;
        for (std::size_t i = ilo; i < jj; ++i) {
            x[i] -= a.entry(i, jj) * x[jj];
        }
    }
    return x;
}

std::vector<double> solve_banded(const BandedSystem& system) {
    if (system.rhs.size() != system.matrix.size()) {
        throw std::invalid_argument("solve_banded: rhs length does not match dimension");
    }
    auto x = solve_banded_impl(system.matrix, system.rhs);
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw SingularSystemError("solve_banded: non-finite solution");
        }
    }
    return x;
}

}  // namespace crossdiff
