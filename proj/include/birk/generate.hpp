#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "birk/matrix.hpp"

namespace birk {

/// Bijection on {0,...,n-1}; row i of the associated matrix carries its unit
/// entry in column map[i]. Validated at construction.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> map);

    std::size_t size() const noexcept { return map_.size(); }
    std::size_t operator()(std::size_t i) const { return map_[i]; }
    const std::vector<std::size_t>& map() const noexcept { return map_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> map_;
};

struct SinkhornConfig {
    std::size_t max_iters = 10000;
    double convergence_tol = 1e-12;  // max |row/col sum - 1|, checked after the column pass

    void validate() const;
};

struct SinkhornResult {
    DenseMatrix matrix;
    std::size_t iters_used = 0;
    double final_residual = 0.0;
};

DenseMatrix permutation_matrix(const Permutation& p);

DenseMatrix uniform_matrix(std::size_t n);

/// Uniformly distributed permutation via Fisher-Yates on mt19937_64.
/// Identical (n, seed) gives identical output on all platforms.
Permutation random_permutation(std::size_t n, std::uint64_t seed);

/// Alternating row/column normalization of a strictly positive matrix
/// (rows first, then columns, each iteration). Throws NumericalError on
/// non-convergence within max_iters.
SinkhornResult sinkhorn(const DenseMatrix& a, const SinkhornConfig& cfg = {});

/// Sinkhorn projection of an n x n matrix of i.i.d. values uniform on
/// (0.01, 1.01); the positivity margin keeps the scaling well conditioned.
DenseMatrix random_bistochastic(std::size_t n, std::uint64_t seed,
                                const SinkhornConfig& cfg = {});

/// Sum of w_i * P(sigma_i). Weights must be non-negative and sum to 1
/// within 1e-12; all permutations must have equal order.
DenseMatrix convex_combination(
    std::span<const std::pair<double, Permutation>> terms);

/// Random permutation support pattern with i.i.d. values in [lo, hi);
/// requires 0 < lo < hi.
DenseMatrix star_permutation_random(std::size_t n, std::uint64_t seed,
                                    double lo, double hi);

/// All entries equal to c > 0.
DenseMatrix star_uniform(std::size_t n, double c);

/// Entrywise multiplication by c > 0.
DenseMatrix scale(const DenseMatrix& a, double c);

}  // namespace birk
