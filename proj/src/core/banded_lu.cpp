#include "core/banded_lu.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace stheat {

BandedLu banded_lu_factor(const BandedMatrix& m) {
    const std::size_t n = m.size();
    const std::size_t kl = m.lower_bandwidth();
    const std::size_t ku = m.upper_bandwidth();
    const double pivot_floor = 1e-14 * m.max_abs();

    // Elimination fill stays inside the band, so work in a band-sized copy.
    BandedMatrix a = m;
    BandedLu out{BandedMatrix(n, kl, 0), BandedMatrix(n, 0, ku)};

    for (std::size_t k = 0; k < n; ++k) {
        const double pivot = a.at(k, k);
        if (std::abs(pivot) <= pivot_floor) throw SingularFactorizationError(k, pivot);
        const std::size_t ihi = std::min(n - 1, k + kl);
        const std::size_t jhi = std::min(n - 1, k + ku);
        for (std::size_t i = k + 1; i <= ihi; ++i) {
            const double lik = a.at(i, k) / pivot;
            a.set(i, k, lik);
            for (std::size_t j = k + 1; j <= jhi; ++j)
                if (a.at(k, j) != 0.0) a.add(i, j, -lik * a.at(k, j));
        }
    }

    for (std::size_t k = 0; k < n; ++k) {
        out.l.set(k, k, 1.0);
        const std::size_t ihi = std::min(n - 1, k + kl);
        for (std::size_t i = k + 1; i <= ihi; ++i) out.l.set(i, k, a.at(i, k));
        const std::size_t jhi = std::min(n - 1, k + ku);
        for (std::size_t j = k; j <= jhi; ++j) out.u.set(k, j, a.at(k, j));
    }
    return out;
}

void banded_lu_solve_inplace(const BandedLu& lu, std::span<double> b) {
    const std::size_t n = lu.l.size();
    if (b.size() != n) throw DimensionError("banded_lu_solve: dimension mismatch");
    const std::size_t kl = lu.l.lower_bandwidth();
    const std::size_t ku = lu.u.upper_bandwidth();

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t jlo = (i >= kl) ? i - kl : 0;
        double s = b[i];
        for (std::size_t j = jlo; j < i; ++j) s -= lu.l.at(i, j) * b[j];
        b[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
        const std::size_t jhi = std::min(n - 1, ii + ku);
        double s = b[ii];
        for (std::size_t j = ii + 1; j <= jhi; ++j) s -= lu.u.at(ii, j) * b[j];
        b[ii] = s / lu.u.at(ii, ii);
    }
}

std::vector<double> banded_lu_solve(const BandedLu& lu, std::span<const double> b) {
    std::vector<double> x(b.begin(), b.end());
    banded_lu_solve_inplace(lu, x);
    return x;
}

}  // namespace stheat
