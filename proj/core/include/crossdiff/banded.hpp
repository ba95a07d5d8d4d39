#pragma once

#include <cstddef>
#include <vector>

namespace crossdiff {

/// Square matrix with equal lower and upper bandwidth b: entries vanish for
/// |i − j| > b. Storage is LAPACK-style band columns with room for the
/// pivoting fill-in (upper bandwidth grows to 2b during factorization).
class BandedMatrix {
public:
    BandedMatrix(std::size_t n, int bandwidth);

    std::size_t size() const { return n_; }
    int bandwidth() const { return b_; }

    /// Zero outside the declared band.
    double at(std::size_t i, std::size_t j) const;

    /// Throws std::out_of_range outside the declared band.
    void add(std::size_t i, std::size_t j, double value);
    void set(std::size_t i, std::size_t j, double value);

private:
    friend std::vector<double> solve_banded_impl(BandedMatrix, std::vector<double>);

    bool in_band(std::size_t i, std::size_t j) const;
    bool in_storage(std::size_t i, std::size_t j) const;
    double& entry(std::size_t i, std::size_t j);
    double entry(std::size_t i, std::size_t j) const;

    std::size_t n_;
    int b_;
    int ldab_;                    // 3b + 1 rows per column
    std::vector<double> store_;   // column-major band storage
};

/// Linear system A x = rhs with banded A.
struct BandedSystem {
    BandedMatrix matrix;
    std::vector<double> rhs;
};

/// Direct solve by banded LU with partial pivoting. Throws SingularSystemError
/// when a pivot falls below 1e-14 times the largest initial entry magnitude.
std::vector<double> solve_banded(const BandedSystem& system);

}  // namespace crossdiff
