#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "birk/factor.hpp"
#include "birk/matrix.hpp"

namespace birk {

struct TrajectorySample {
    std::size_t t = 0;
    double log_m = 0.0;
};

/// log M(B^t) for t = 1..t_max, plus whether the final sample reached the
/// uniform-matrix limit -2 n ln n within limit_tol.
struct TrajectoryRecord {
    std::vector<TrajectorySample> samples;
    std::size_t n = 0;
    bool converged = false;
};

/// Extreme log matching factors seen by a brute-force scan, and whether the
/// extremes occurred at the uniform point / at polytope vertices.
struct OracleResult {
    double min_log_m = 0.0;
    double max_log_m = 0.0;
    bool argmin_is_uniform = false;
    bool argmax_is_vertex = false;
    std::size_t points_scanned = 0;
};

/// Powers B, B^2, ..., B^t_max by repeated multiplication (fixed
/// left-to-right association), recording log M at each power. Each product
/// is re-validated bistochastic within sum_tol + t * 1e-12 * n, a first-order
/// budget for accumulated roundoff; drift beyond it throws NumericalError
/// naming the failing t.
TrajectoryRecord power_trajectory(const DenseMatrix& b, std::size_t t_max,
                                  double limit_tol = 1e-3,
                                  const ToleranceConfig& tol = {});

/// Normalized permutation proximity rho = 1 + log_m / (2 n ln n), clamped to
/// [0, 1]: 1 for permutation matrices, 0 for the uniform matrix. Defined as
/// 1 for n = 1 (the sole matrix is a permutation). Requires a Plain profile.
double permutation_proximity(const MatchingProfile& profile);

/// Analytic matching factor for order 2: every 2x2 bistochastic matrix is
/// [[p, 1-p], [1-p, p]], giving M = (p^2 + (1-p)^2)^4.
double closed_form_m_n2(double p);

/// Brute-force extreme scan. n = 2 sweeps `resolution` grid points of the
/// closed form; n = 3 evaluates `resolution` seeded random convex
/// combinations of all six permutation matrices (flat-Dirichlet weights)
/// plus the six vertices and the uniform point.
OracleResult oracle_grid_scan(std::size_t n, std::size_t resolution,
                              std::uint64_t seed);

}  // namespace birk
