#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace stheat {

using cplx = std::complex<double>;

namespace detail {

// Column-major dense storage shared by the real and complex matrix variants.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return data_[i + rows_ * j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i + rows_ * j]; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }

    std::span<T> column(std::size_t j) { return {data_.data() + rows_ * j, rows_}; }
    std::span<const T> column(std::size_t j) const { return {data_.data() + rows_ * j, rows_}; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

}  // namespace detail

using DenseMatrix = detail::Matrix<double>;
using ZMatrix = detail::Matrix<cplx>;

/// Explicit real-to-complex promotion.
ZMatrix to_complex(const DenseMatrix& a);

DenseMatrix transpose(const DenseMatrix& a);
ZMatrix transpose(const ZMatrix& a);
ZMatrix adjoint(const ZMatrix& a);

std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x);
std::vector<cplx> matvec(const ZMatrix& a, std::span<const cplx> x);

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
ZMatrix matmul(const ZMatrix& a, const ZMatrix& b);

double max_abs(const DenseMatrix& a);
double max_abs(const ZMatrix& a);
double frobenius_norm(const DenseMatrix& a);
double frobenius_norm(const ZMatrix& a);

/// Square real matrix stored by diagonals; entries outside the band are identically zero.
class BandedMatrix {
public:
    BandedMatrix() = default;
    BandedMatrix(std::size_t n, std::size_t lower_bw, std::size_t upper_bw);

    static BandedMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    std::size_t lower_bandwidth() const { return kl_; }
    std::size_t upper_bandwidth() const { return ku_; }

    bool in_band(std::size_t i, std::size_t j) const {
        return (j <= i + ku_) && (i <= j + kl_);
    }

    /// Entry (i,j); zero outside the band.
    double at(std::size_t i, std::size_t j) const {
        return in_band(i, j) ? data_[offset(i, j)] : 0.0;
    }

    void set(std::size_t i, std::size_t j, double v);
    void add(std::size_t i, std::size_t j, double v);

    double max_abs() const;

private:
    std::size_t offset(std::size_t i, std::size_t j) const {
        return (i - j + ku_) + j * (kl_ + ku_ + 1);
    }

    std::size_t n_ = 0;
    std::size_t kl_ = 0;
    std::size_t ku_ = 0;
    std::vector<double> data_;
};

DenseMatrix to_dense(const BandedMatrix& a);
bool is_identity(const BandedMatrix& a);

std::vector<double> matvec(const BandedMatrix& a, std::span<const double> x);
std::vector<cplx> matvec(const BandedMatrix& a, std::span<const cplx> x);

/// Matrix Market coordinate text dump ("%%MatrixMarket matrix coordinate real general").
void write_matrix_market(const DenseMatrix& a, std::ostream& os);
void write_matrix_market(const BandedMatrix& a, std::ostream& os);

}  // namespace stheat
