#include "core/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "core/errors.hpp"

namespace stheat {

ZMatrix to_complex(const DenseMatrix& a) {
    ZMatrix z(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) z(i, j) = a(i, j);
    return z;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.cols(), a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) t(j, i) = a(i, j);
    return t;
}

ZMatrix transpose(const ZMatrix& a) {
    ZMatrix t(a.cols(), a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) t(j, i) = a(i, j);
    return t;
}

ZMatrix adjoint(const ZMatrix& a) {
    ZMatrix t(a.cols(), a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) t(j, i) = std::conj(a(i, j));
    return t;
}

namespace {

template <class T>
std::vector<T> dense_matvec(const detail::Matrix<T>& a, std::span<const T> x) {
    if (x.size() != a.cols()) throw DimensionError("matvec: dimension mismatch");
    std::vector<T> y(a.rows(), T{});
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const T xj = x[j];
        const T* col = a.data() + a.rows() * j;
        for (std::size_t i = 0; i < a.rows(); ++i) y[i] += col[i] * xj;
    }
    return y;
}

template <class T>
detail::Matrix<T> dense_matmul(const detail::Matrix<T>& a, const detail::Matrix<T>& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul: dimension mismatch");
    detail::Matrix<T> c(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T bkj = b(k, j);
            if (bkj == T{}) continue;
            const T* col = a.data() + a.rows() * k;
            T* out = c.data() + c.rows() * j;
            for (std::size_t i = 0; i < a.rows(); ++i) out[i] += col[i] * bkj;
        }
    }
    return c;
}

}  // namespace

std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x) {
    return dense_matvec(a, x);
}

std::vector<cplx> matvec(const ZMatrix& a, std::span<const cplx> x) {
    return dense_matvec(a, x);
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) { return dense_matmul(a, b); }
ZMatrix matmul(const ZMatrix& a, const ZMatrix& b) { return dense_matmul(a, b); }

double max_abs(const DenseMatrix& a) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) m = std::max(m, std::abs(a(i, j)));
    return m;
}

double max_abs(const ZMatrix& a) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) m = std::max(m, std::abs(a(i, j)));
    return m;
}

double frobenius_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

double frobenius_norm(const ZMatrix& a) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::norm(a(i, j));
    return std::sqrt(s);
}

BandedMatrix::BandedMatrix(std::size_t n, std::size_t lower_bw, std::size_t upper_bw)
    : n_(n), kl_(lower_bw), ku_(upper_bw), data_(n * (lower_bw + upper_bw + 1), 0.0) {
    if (n == 0) throw InvalidArgumentError("BandedMatrix: empty matrix");
    if (kl_ >= n || ku_ >= n)
        throw InvalidArgumentError("BandedMatrix: bandwidth must be below the matrix size");
}

BandedMatrix BandedMatrix::identity(std::size_t n) {
    BandedMatrix m(n, 0, 0);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

void BandedMatrix::set(std::size_t i, std::size_t j, double v) {
    if (!in_band(i, j)) throw InvalidArgumentError("BandedMatrix::set outside the band");
    data_[offset(i, j)] = v;
}

void BandedMatrix::add(std::size_t i, std::size_t j, double v) {
    if (!in_band(i, j)) throw InvalidArgumentError("BandedMatrix::add outside the band");
    data_[offset(i, j)] += v;
}

double BandedMatrix::max_abs() const {
    double m = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t ilo = (j >= ku_) ? j - ku_ : 0;
        const std::size_t ihi = std::min(n_ - 1, j + kl_);
        for (std::size_t i = ilo; i <= ihi; ++i) m = std::max(m, std::abs(at(i, j)));
    }
    return m;
}

DenseMatrix to_dense(const BandedMatrix& a) {
    DenseMatrix d(a.size(), a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        const std::size_t ilo = (j >= a.upper_bandwidth()) ? j - a.upper_bandwidth() : 0;
        const std::size_t ihi = std::min(a.size() - 1, j + a.lower_bandwidth());
        for (std::size_t i = ilo; i <= ihi; ++i) d(i, j) = a.at(i, j);
    }
    return d;
}

bool is_identity(const BandedMatrix& a) {
    for (std::size_t j = 0; j < a.size(); ++j) {
        const std::size_t ilo = (j >= a.upper_bandwidth()) ? j - a.upper_bandwidth() : 0;
        const std::size_t ihi = std::min(a.size() - 1, j + a.lower_bandwidth());
        for (std::size_t i = ilo; i <= ihi; ++i)
            if (a.at(i, j) != (i == j ? 1.0 : 0.0)) return false;
    }
    return true;
}

namespace {

template <class T>
std::vector<T> banded_matvec(const BandedMatrix& a, std::span<const T> x) {
    if (x.size() != a.size()) throw DimensionError("banded matvec: dimension mismatch");
    std::vector<T> y(a.size(), T{});
    for (std::size_t j = 0; j < a.size(); ++j) {
        const std::size_t ilo = (j >= a.upper_bandwidth()) ? j - a.upper_bandwidth() : 0;
        const std::size_t ihi = std::min(a.size() - 1, j + a.lower_bandwidth());
        const T xj = x[j];
        for (std::size_t i = ilo; i <= ihi; ++i) y[i] += a.at(i, j) * xj;
    }
    return y;
}

}  // namespace

std::vector<double> matvec(const BandedMatrix& a, std::span<const double> x) {
    return banded_matvec(a, x);
}

std::vector<cplx> matvec(const BandedMatrix& a, std::span<const cplx> x) {
    return banded_matvec(a, x);
}

namespace {

void write_mm_header(std::ostream& os, std::size_t rows, std::size_t cols, std::size_t nnz) {
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << rows << " " << cols << " " << nnz << "\n";
}

}  // namespace

void write_matrix_market(const DenseMatrix& a, std::ostream& os) {
    std::size_t nnz = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a(i, j) != 0.0) ++nnz;
    write_mm_header(os, a.rows(), a.cols(), nnz);
    os.precision(17);
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a(i, j) != 0.0) os << i + 1 << " " << j + 1 << " " << a(i, j) << "\n";
}

void write_matrix_market(const BandedMatrix& a, std::ostream& os) {
    std::size_t nnz = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.at(i, j) != 0.0) ++nnz;
    write_mm_header(os, a.size(), a.size(), nnz);
    os.precision(17);
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.at(i, j) != 0.0) os << i + 1 << " " << j + 1 << " " << a.at(i, j) << "\n";
}

}  // namespace stheat
