#pragma once

// Shared fixtures and test-only reference computations. The oracle routines
// recompute everything with plain per-entry long double loops and linear-space
// products, independent of the library's marginal/log-space path.

#include <cmath>
#include <cstdint>
#include <vector>

#include "birk/matrix.hpp"
#include "birk/rng.hpp"

namespace support {

// [[1/3,1/3,1/3],[0,2/3,1/3],[2/3,0,1/3]]
inline birk::DenseMatrix example_3x3() {
    const double t = 1.0 / 3.0;
    const double tt = 2.0 / 3.0;
    return {3, {t, t, t, 0.0, tt, t, tt, 0.0, t}};
}

// [[1/2,0],[1/2,1/2]]
inline birk::DenseMatrix star_positive_2x2() {
    return {2, {0.5, 0.0, 0.5, 0.5}};
}

// [[1/2,0],[0,1/32]]
inline birk::DenseMatrix star_permutation_2x2() {
    return {2, {0.5, 0.0, 0.0, 1.0 / 32.0}};
}

// permutation support plus extra positive cells with probability `density`
inline birk::DenseMatrix random_star_positive(std::size_t n, std::uint64_t seed,
                                              double density = 0.4) {
    birk::SeededRng rng(seed);
    std::vector<std::size_t> map(n);
    for (std::size_t i = 0; i < n; ++i) map[i] = i;
    for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(map[i], map[rng.next_below(i + 1)]);
    }
    std::vector<double> entries(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        entries[i * n + map[i]] = rng.next_in(0.1, 2.0);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j != map[i] && rng.next_unit() < density) {
                entries[i * n + j] = rng.next_in(0.1, 2.0);
            }
        }
    }
    return {n, std::move(entries)};
}

}  // namespace support

namespace oracle {

inline long double row_norm_sq(const birk::DenseMatrix& m, std::size_t k) {
    long double s = 0.0L;
    for (std::size_t j = 0; j < m.order(); ++j) {
        s += static_cast<long double>(m(k, j)) * m(k, j);
    }
    return s;
}

inline long double col_norm_sq(const birk::DenseMatrix& m, std::size_t k) {
    long double s = 0.0L;
    for (std::size_t i = 0; i < m.order(); ++i) {
        s += static_cast<long double>(m(i, k)) * m(i, k);
    }
    return s;
}

inline long double row_sum(const birk::DenseMatrix& m, std::size_t k) {
    long double s = 0.0L;
    for (std::size_t j = 0; j < m.order(); ++j) s += m(k, j);
    return s;
}

inline long double col_sum(const birk::DenseMatrix& m, std::size_t k) {
    long double s = 0.0L;
    for (std::size_t i = 0; i < m.order(); ++i) s += m(i, k);
    return s;
}

inline long double lambda(const birk::DenseMatrix& m, std::size_t k) {
    return row_norm_sq(m, k) * col_norm_sq(m, k);
}

inline long double matching_linear(const birk::DenseMatrix& m) {
    long double prod = 1.0L;
    for (std::size_t k = 0; k < m.order(); ++k) prod *= lambda(m, k);
    return prod;
}

inline long double star_lambda(const birk::DenseMatrix& m, std::size_t k) {
    const long double rs = row_sum(m, k);
    const long double cs = col_sum(m, k);
    return (row_norm_sq(m, k) * col_norm_sq(m, k)) / (rs * rs * cs * cs);
}

inline long double star_matching_linear(const birk::DenseMatrix& m) {
    long double prod = 1.0L;
    for (std::size_t k = 0; k < m.order(); ++k) prod *= star_lambda(m, k);
    return prod;
}

inline long double log_matching(const birk::DenseMatrix& m) {
    long double s = 0.0L;
    for (std::size_t k = 0; k < m.order(); ++k) s += std::log(lambda(m, k));
    return s;
}

// plain long double triple loop, independent of the library's multiply
inline birk::DenseMatrix multiply(const birk::DenseMatrix& a,
                                  const birk::DenseMatrix& b) {
    const std::size_t n = a.order();
    std::vector<double> c(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            long double s = 0.0L;
            for (std::size_t k = 0; k < n; ++k) {
                s += static_cast<long double>(a(i, k)) * b(k, j);
            }
            c[i * n + j] = static_cast<double>(s);
        }
    }
    return {n, std::move(c)};
}

}  // namespace oracle
