#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "core/matrix.hpp"

namespace stheat {

using KronFactor = std::variant<DenseMatrix, BandedMatrix>;

std::size_t kron_factor_rows(const KronFactor& f);
std::size_t kron_factor_cols(const KronFactor& f);

/// A_d (x) ... (x) A_1 held as its factor list; the last factor acts on the
/// fastest-varying index. The full Kronecker matrix is never formed.
class KronOperator {
public:
    KronOperator() = default;
    explicit KronOperator(std::vector<KronFactor> factors);

    std::size_t factor_count() const { return factors_.size(); }
    const KronFactor& factor(std::size_t i) const { return factors_[i]; }

    std::size_t out_dim() const;
    std::size_t in_dim() const;

private:
    std::vector<KronFactor> factors_;
};

/// (A_d (x) ... (x) A_1) x by successive matricized products, O(N * sum N_l) for
/// square factors.
std::vector<double> kron_matvec(const KronOperator& op, std::span<const double> x);

/// Complex variant with dense factors.
class ZKronOperator {
public:
    ZKronOperator() = default;
    explicit ZKronOperator(std::vector<ZMatrix> factors);

    std::size_t factor_count() const { return factors_.size(); }
    const ZMatrix& factor(std::size_t i) const { return factors_[i]; }

    std::size_t out_dim() const;
    std::size_t in_dim() const;

private:
    std::vector<ZMatrix> factors_;
};

std::vector<cplx> kron_matvec(const ZKronOperator& op, std::span<const cplx> x);

/// Perfect shuffle exchanging the two tensor slots of a length n_t*n_s vector.
/// Forward maps the space-fastest layout x[i + n_s*k] to the time-fastest
/// layout y[k + n_t*i].
class ShufflePermutation {
public:
    ShufflePermutation(std::size_t n_t, std::size_t n_s);

    std::size_t n_t() const { return n_t_; }
    std::size_t n_s() const { return n_s_; }
    std::size_t dim() const { return n_t_ * n_s_; }

    /// Source index feeding output slot j of the forward permutation.
    std::size_t source(std::size_t j) const { return map_[j]; }

private:
    std::size_t n_t_;
    std::size_t n_s_;
    std::vector<std::size_t> map_;
};

std::vector<double> shuffle_apply(const ShufflePermutation& perm, std::span<const double> x,
                                  bool inverse = false);
std::vector<cplx> shuffle_apply(const ShufflePermutation& perm, std::span<const cplx> x,
                                bool inverse = false);

}  // namespace stheat
