#include "core/kron.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace stheat {

std::size_t kron_factor_rows(const KronFactor& f) {
    return std::visit([](const auto& m) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, BandedMatrix>)
            return m.size();
        else
            return m.rows();
    }, f);
}

std::size_t kron_factor_cols(const KronFactor& f) {
    return std::visit([](const auto& m) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, BandedMatrix>)
            return m.size();
        else
            return m.cols();
    }, f);
}

KronOperator::KronOperator(std::vector<KronFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw InvalidArgumentError("KronOperator: no factors");
}

std::size_t KronOperator::out_dim() const {
    std::size_t n = 1;
    for (const auto& f : factors_) n *= kron_factor_rows(f);
    return n;
}

std::size_t KronOperator::in_dim() const {
    std::size_t n = 1;
    for (const auto& f : factors_) n *= kron_factor_cols(f);
    return n;
}

namespace {

// One mode of the matricized product: out[i + inner*(r + m*o)] =
// sum_k F[r,k] in[i + inner*(k + n*o)]; columns are contiguous slabs of
// length `inner`.
template <class T>
void mode_apply_dense(const DenseMatrix& f, const std::vector<T>& in, std::vector<T>& out,
                      std::size_t inner, std::size_t outer) {
    const std::size_t m = f.rows(), n = f.cols();
    std::fill(out.begin(), out.end(), T{});
    for (std::size_t o = 0; o < outer; ++o) {
        const T* in_block = in.data() + inner * n * o;
        T* out_block = out.data() + inner * m * o;
        for (std::size_t k = 0; k < n; ++k) {
            const T* src = in_block + inner * k;
            for (std::size_t r = 0; r < m; ++r) {
                const double frk = f(r, k);
                if (frk == 0.0) continue;
                T* dst = out_block + inner * r;
                for (std::size_t i = 0; i < inner; ++i) dst[i] += frk * src[i];
            }
        }
    }
}

template <class T>
void mode_apply_banded(const BandedMatrix& f, const std::vector<T>& in, std::vector<T>& out,
                       std::size_t inner, std::size_t outer) {
    const std::size_t n = f.size();
    std::fill(out.begin(), out.end(), T{});
    for (std::size_t o = 0; o < outer; ++o) {
        const T* in_block = in.data() + inner * n * o;
        T* out_block = out.data() + inner * n * o;
        for (std::size_t k = 0; k < n; ++k) {
            const T* src = in_block + inner * k;
            const std::size_t rlo = (k >= f.upper_bandwidth()) ? k - f.upper_bandwidth() : 0;
            const std::size_t rhi = std::min(n - 1, k + f.lower_bandwidth());
            for (std::size_t r = rlo; r <= rhi; ++r) {
                const double frk = f.at(r, k);
                if (frk == 0.0) continue;
                T* dst = out_block + inner * r;
                for (std::size_t i = 0; i < inner; ++i) dst[i] += frk * src[i];
            }
        }
    }
}

void mode_apply_zdense(const ZMatrix& f, const std::vector<cplx>& in, std::vector<cplx>& out,
                       std::size_t inner, std::size_t outer) {
    const std::size_t m = f.rows(), n = f.cols();
    std::fill(out.begin(), out.end(), cplx{});
    for (std::size_t o = 0; o < outer; ++o) {
        const cplx* in_block = in.data() + inner * n * o;
        cplx* out_block = out.data() + inner * m * o;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx* src = in_block + inner * k;
            for (std::size_t r = 0; r < m; ++r) {
                const cplx frk = f(r, k);
                if (frk == cplx{}) continue;
                cplx* dst = out_block + inner * r;
                for (std::size_t i = 0; i < inner; ++i) dst[i] += frk * src[i];
            }
        }
    }
}

}  // namespace

std::vector<double> kron_matvec(const KronOperator& op, std::span<const double> x) {
    if (x.size() != op.in_dim()) throw DimensionError("kron_matvec: dimension mismatch");
    const std::size_t nf = op.factor_count();
    std::vector<double> cur(x.begin(), x.end());
    std::vector<double> next;
    // Modes processed fastest first; factor nf-1 acts on the fastest index.
    std::size_t inner = 1;
    for (std::size_t t = 0; t < nf; ++t) {
        const KronFactor& f = op.factor(nf - 1 - t);
        const std::size_t n = kron_factor_cols(f);
        const std::size_t m = kron_factor_rows(f);
        const std::size_t outer = cur.size() / (inner * n);
        next.assign(inner * m * outer, 0.0);
        std::visit([&](const auto& mat) {
            if constexpr (std::is_same_v<std::decay_t<decltype(mat)>, BandedMatrix>)
                mode_apply_banded(mat, cur, next, inner, outer);
            else
                mode_apply_dense(mat, cur, next, inner, outer);
        }, f);
        cur.swap(next);
        inner *= m;
    }
    return cur;
}

ZKronOperator::ZKronOperator(std::vector<ZMatrix> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw InvalidArgumentError("ZKronOperator: no factors");
}

std::size_t ZKronOperator::out_dim() const {
    std::size_t n = 1;
    for (const auto& f : factors_) n *= f.rows();
    return n;
}

std::size_t ZKronOperator::in_dim() const {
    std::size_t n = 1;
    for (const auto& f : factors_) n *= f.cols();
    return n;
}

std::vector<cplx> kron_matvec(const ZKronOperator& op, std::span<const cplx> x) {
    if (x.size() != op.in_dim()) throw DimensionError("kron_matvec: dimension mismatch");
    const std::size_t nf = op.factor_count();
    std::vector<cplx> cur(x.begin(), x.end());
    std::vector<cplx> next;
    std::size_t inner = 1;
    for (std::size_t t = 0; t < nf; ++t) {
        const ZMatrix& f = op.factor(nf - 1 - t);
        const std::size_t outer = cur.size() / (inner * f.cols());
        next.assign(inner * f.rows() * outer, cplx{});
        mode_apply_zdense(f, cur, next, inner, outer);
        cur.swap(next);
        inner *= f.rows();
    }
    return cur;
}

ShufflePermutation::ShufflePermutation(std::size_t n_t, std::size_t n_s)
    : n_t_(n_t), n_s_(n_s), map_(n_t * n_s) {
    if (n_t == 0 || n_s == 0) throw InvalidArgumentError("ShufflePermutation: empty block");
    for (std::size_t i = 0; i < n_s; ++i)
        for (std::size_t k = 0; k < n_t; ++k) map_[k + n_t * i] = i + n_s * k;
}

namespace {

template <class T>
std::vector<T> shuffle_impl(const ShufflePermutation& p, std::span<const T> x, bool inverse) {
    if (x.size() != p.dim()) throw DimensionError("shuffle_apply: dimension mismatch");
    std::vector<T> y(x.size());
    if (!inverse) {
        for (std::size_t j = 0; j < y.size(); ++j) y[j] = x[p.source(j)];
    } else {
        for (std::size_t j = 0; j < y.size(); ++j) y[p.source(j)] = x[j];
    }
    return y;
}

}  // namespace

std::vector<double> shuffle_apply(const ShufflePermutation& perm, std::span<const double> x,
                                  bool inverse) {
    return shuffle_impl(perm, x, inverse);
}

std::vector<cplx> shuffle_apply(const ShufflePermutation& perm, std::span<const cplx> x,
                                bool inverse) {
    return shuffle_impl(perm, x, inverse);
}

}  // namespace stheat
