#include "birk/bvn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace birk {

namespace {

constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

struct MatchState {
    const std::vector<std::vector<std::size_t>>& adj;  // ascending columns per row
    std::vector<std::size_t> row_to_col;
    std::vector<std::size_t> col_to_row;
    std::vector<bool> visited;  // per-augmentation column marks

    explicit MatchState(const std::vector<std::vector<std::size_t>>& a)
        : adj(a),
          row_to_col(a.size(), kUnmatched),
          col_to_row(a.size(), kUnmatched),
          visited(a.size(), false) {}

    bool augment(std::size_t row) {
        // claim a free column before disturbing existing matches
        for (const std::size_t col : adj[row]) {
            if (col_to_row[col] == kUnmatched) {
                col_to_row[col] = row;
                row_to_col[row] = col;
                return true;
            }
        }
        for (const std::size_t col : adj[row]) {
            if (visited[col]) continue;
            visited[col] = true;
            if (augment(col_to_row[col])) {
                col_to_row[col] = row;
                row_to_col[row] = col;
                return true;
            }
        }
        return false;
    }
};

std::vector<std::size_t> matching_on_support(const std::vector<double>& entries,
                                             std::size_t n, double threshold) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (entries[i * n + j] > threshold) adj[i].push_back(j);
        }
    }
    MatchState state(adj);
    for (std::size_t row = 0; row < n; ++row) {
        std::fill(state.visited.begin(), state.visited.end(), false);
        if (!state.augment(row)) {
            throw NumericalError(
                "no perfect matching on the support thresholded at " +
                std::to_string(threshold) + " (failed at row " +
                std::to_string(row) + ")");
        }
    }
    return state.row_to_col;
}

}  // namespace

Permutation support_matching(const DenseMatrix& b, double threshold) {
    return Permutation(matching_on_support(b.entries(), b.order(), threshold));
}

BvnDecomposition bvn_decompose(const DenseMatrix& b, const ToleranceConfig& tol,
                               std::size_t max_terms) {
    const ClassificationReport report = classify(b, tol);
    if (!report.is_bistochastic) {
        throw ValidationError("decomposition requires a bistochastic matrix (max sum residual " +
                              std::to_string(report.max_sum_residual) + ")");
    }
    const std::size_t n = b.order();
    if (max_terms == 0) max_terms = n * n - 2 * n + 2;  // Marcus-Ree cap

    std::vector<double> residual = b.entries();
    const auto residual_mass = [&] {
        double total = 0.0;
        for (const double v : residual) total += v;
        return total / static_cast<double>(n);
    };
    const double stop_threshold = tol.zero_tol * static_cast<double>(n);

    BvnDecomposition out;
    out.n = n;
    for (;;) {
        const double max_entry = *std::max_element(residual.begin(), residual.end());
        if (max_entry < stop_threshold) break;
        if (out.terms.size() == max_terms) {
            const double mass = residual_mass();
            if (mass > 1e-8) {
                throw NumericalError("max term count " + std::to_string(max_terms) +
                                     " exhausted with residual mass " +
                                     std::to_string(mass));
            }
            break;
        }
        std::vector<std::size_t> map = matching_on_support(residual, n, tol.zero_tol);
        double weight = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            weight = std::min(weight, residual[i * n + map[i]]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            double& cell = residual[i * n + map[i]];
            cell -= weight;
            if (cell < 0.0 && cell >= -1e-15) cell = 0.0;  // floating-point dust
        }
        out.terms.push_back({weight, Permutation(std::move(map))});
    }
    out.residual_mass = residual_mass();
    return out;
}

DenseMatrix recompose(const BvnDecomposition& d) {
    if (d.n == 0) throw ValidationError("decomposition order must be positive");
    std::vector<double> entries(d.n * d.n, 0.0);
    for (const BvnTerm& term : d.terms) {
        if (term.permutation.size() != d.n) {
            throw ValidationError("term order differs from decomposition order");
        }
        for (std::size_t i = 0; i < d.n; ++i) {
            entries[i * d.n + term.permutation(i)] += term.weight;
        }
    }
    return {d.n, std::move(entries)};
}

}  // namespace birk
