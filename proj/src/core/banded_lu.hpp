#pragma once

#include <span>
#include <vector>

#include "core/matrix.hpp"

namespace stheat {

struct BandedLu {
    BandedMatrix l;  // unit lower triangular, lower bandwidth of the input
    BandedMatrix u;  // upper triangular, upper bandwidth of the input
};

/// LU factorization without pivoting; the factors keep the input bandwidths.
/// Throws SingularFactorizationError (with the pivot index) when a pivot falls
/// below 1e-14 * max|m|.
BandedLu banded_lu_factor(const BandedMatrix& m);

std::vector<double> banded_lu_solve(const BandedLu& lu, std::span<const double> b);

/// Forward/backward substitution on the factor pair, one right-hand side.
void banded_lu_solve_inplace(const BandedLu& lu, std::span<double> b);

}  // namespace stheat
