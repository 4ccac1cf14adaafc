#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace birk {

/// Input failed structural validation (bad dimensions, negative or
/// non-finite entries, precondition violations). Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative method failed to converge or a matching does not exist.
/// Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Absolute tolerances for membership tests. Exact equalities from the
/// definitions cannot hold for file-parsed doubles, so every test is banded.
struct ToleranceConfig {
    double sum_tol = 1e-9;        // |row/column sum - 1|
    double zero_tol = 1e-12;      // entries at or below this are structural zeros
    double class_log_tol = 1e-9;  // log-space band for extreme classification

    void validate() const;
};

/// Dense non-negative square matrix, row-major.
///
/// Entries are validated at construction: NaN, infinity and negative values
/// are rejected rather than clamped. Instances are immutable; all library
/// operations are pure functions over them.
class DenseMatrix {
public:
    DenseMatrix(std::size_t n, std::vector<double> entries);

    std::size_t order() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const {
        return entries_[i * n_ + j];
    }

    std::span<const double> row(std::size_t i) const {
        return {entries_.data() + i * n_, n_};
    }

    const std::vector<double>& entries() const noexcept { return entries_; }

private:
    std::size_t n_;
    std::vector<double> entries_;
};

/// Row/column sums and squared Euclidean norms, one value per index.
/// Summation is plain sequential accumulation in ascending index order so
/// results are bit-reproducible.
struct Marginals {
    std::vector<double> row_sums;
    std::vector<double> col_sums;
    std::vector<double> row_norms_sq;
    std::vector<double> col_norms_sq;
};

/// Membership in the six matrix classes, tested at the given tolerances.
struct ClassificationReport {
    bool is_nonnegative = false;
    bool is_bistochastic = false;
    bool is_star_positive = false;
    bool is_permutation = false;
    bool is_star_permutation = false;
    bool is_uniform = false;
    bool is_star_uniform = false;
    double max_sum_residual = 0.0;  // largest |row or column sum - 1|
};

Marginals marginals(const DenseMatrix& m);

/// Tests the matrix against all six classes.
///
/// The implication chain (permutation => bistochastic and star-permutation,
/// uniform => bistochastic and star-uniform, bistochastic => star-positive)
/// holds for every input by construction.
ClassificationReport classify(const DenseMatrix& m, const ToleranceConfig& tol = {});

}  // namespace birk
