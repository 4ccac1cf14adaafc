#include "birk/matrix.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace birk {

void ToleranceConfig::validate() const {
    if (!(sum_tol > 0.0) || !(zero_tol > 0.0) || !(class_log_tol > 0.0)) {
        throw ValidationError("tolerances must be positive");
    }
}

DenseMatrix::DenseMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) {
        throw ValidationError("matrix order must be positive");
    }
    if (entries_.size() != n_ * n_) {
        throw ValidationError("expected " + std::to_string(n_ * n_) +
                              " entries, got " + std::to_string(entries_.size()));
    }
    for (std::size_t idx = 0; idx < entries_.size(); ++idx) {
        const double v = entries_[idx];
        // !(v >= 0) also catches NaN
        if (!std::isfinite(v) || !(v >= 0.0)) {
            throw ValidationError("entry (" + std::to_string(idx / n_) + "," +
                                  std::to_string(idx % n_) +
                                  ") is not a finite non-negative number");
        }
    }
}

Marginals marginals(const DenseMatrix& m) {
    const std::size_t n = m.order();
    Marginals out;
    out.row_sums.assign(n, 0.0);
    out.col_sums.assign(n, 0.0);
    out.row_norms_sq.assign(n, 0.0);
    out.col_norms_sq.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = m(i, j);
            out.row_sums[i] += v;
            out.col_sums[j] += v;
            out.row_norms_sq[i] += v * v;
            out.col_norms_sq[j] += v * v;
        }
    }
    return out;
}

ClassificationReport classify(const DenseMatrix& m, const ToleranceConfig& tol) {
    tol.validate();
    const std::size_t n = m.order();
    const Marginals mg = marginals(m);

    ClassificationReport r;
    r.is_nonnegative = true;  // construction rejects anything else

    double max_res = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        max_res = std::max(max_res, std::abs(mg.row_sums[k] - 1.0));
        max_res = std::max(max_res, std::abs(mg.col_sums[k] - 1.0));
    }
    r.max_sum_residual = max_res;
    r.is_bistochastic = max_res <= tol.sum_tol;

    std::vector<std::size_t> row_pos(n, 0), col_pos(n, 0);
    double min_entry = std::numeric_limits<double>::infinity();
    double max_entry = -std::numeric_limits<double>::infinity();
    bool singles_are_unit = true;  // every row's sole positive entry ~ 1
    bool all_near_inv_n = true;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = m(i, j);
            min_entry = std::min(min_entry, v);
            max_entry = std::max(max_entry, v);
            if (v > tol.zero_tol) {
                ++row_pos[i];
                ++col_pos[j];
                if (std::abs(v - 1.0) > tol.sum_tol) singles_are_unit = false;
            }
            if (std::abs(v - inv_n) > tol.sum_tol) all_near_inv_n = false;
        }
    }

    bool star_positive = true;
    bool star_permutation = true;
    for (std::size_t k = 0; k < n; ++k) {
        if (row_pos[k] == 0 || col_pos[k] == 0) star_positive = false;
        if (row_pos[k] != 1 || col_pos[k] != 1) star_permutation = false;
    }
    r.is_star_positive = star_positive;
    r.is_star_permutation = star_permutation;
    r.is_permutation = r.is_bistochastic && star_permutation && singles_are_unit;
    r.is_star_uniform = star_positive && (max_entry - min_entry <= tol.zero_tol);
    // The star_uniform conjunct keeps uniform => star_uniform true for
    // borderline inputs whose entries hug 1/n at sum_tol but spread past
    // zero_tol.
    r.is_uniform = r.is_bistochastic && r.is_star_uniform && all_near_inv_n;
    return r;
}

}  // namespace birk
