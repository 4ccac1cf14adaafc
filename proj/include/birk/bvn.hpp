#pragma once

#include <cstddef>
#include <vector>

#include "birk/generate.hpp"
#include "birk/matrix.hpp"

namespace birk {

struct BvnTerm {
    double weight = 0.0;
    Permutation permutation;
};

/// Convex combination of permutation matrices expressing a bistochastic
/// matrix, plus the mass the greedy loop could not transfer.
struct BvnDecomposition {
    std::size_t n = 0;
    std::vector<BvnTerm> terms;
    double residual_mass = 0.0;
};

/// Perfect matching on the bipartite support graph {rows} x {columns} with
/// edges where b(i,j) > threshold. Augmenting-path search with deterministic
/// lowest-index tie-breaking: rows are processed ascending, free columns are
/// claimed before augmentation is attempted, and candidate columns are
/// scanned ascending in both phases. Throws NumericalError when no perfect
/// matching exists on the thresholded support.
Permutation support_matching(const DenseMatrix& b, double threshold);

/// Greedy matching-and-subtract decomposition: repeatedly find a support
/// matching at threshold zero_tol, transfer the minimum matched entry as the
/// term weight, and subtract, until the residual's largest entry falls below
/// n * zero_tol or max_terms is reached. max_terms == 0 selects the
/// n^2 - 2n + 2 cap (no valid decomposition needs more terms).
///
/// Throws ValidationError when b is not bistochastic within tol, and
/// NumericalError on matching failure or when max_terms is exhausted with
/// residual mass above 1e-8.
BvnDecomposition bvn_decompose(const DenseMatrix& b, const ToleranceConfig& tol = {},
                               std::size_t max_terms = 0);

/// Sum of weight * P(sigma) over the decomposition's terms.
DenseMatrix recompose(const BvnDecomposition& d);

}  // namespace birk
