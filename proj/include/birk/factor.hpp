#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "birk/matrix.hpp"

namespace birk {

enum class FactorVariant { Plain, Star };

/// Per-index matching factors and their product.
///
/// The product is always evaluated in log space: the lower bound 1/n^(2n)
/// underflows binary64 near n ~ 82, so log_m is the authoritative value and
/// m_linear = exp(log_m) may underflow to 0 for large n (benign).
struct MatchingProfile {
    std::size_t n = 0;
    std::vector<double> lambdas;      // per-index factors; may underflow to 0
    std::vector<double> log_lambdas;  // natural log of each factor
    double log_m = 0.0;               // sum of log_lambdas, ascending index
    double m_linear = 0.0;            // exp(log_m)
    double log_lower_bound = 0.0;     // -2 n ln n
    double log_upper_bound = 0.0;     // 0
    FactorVariant variant = FactorVariant::Plain;
};

enum class ExtremeKind { Permutation, Uniform, Interior, Degenerate };

/// Outcome of extreme-point classification of a bistochastic matrix.
struct ExtremeClass {
    ExtremeKind kind = ExtremeKind::Interior;
    // present iff kind == Permutation; permutation[i] = column of row i's unit entry
    std::optional<std::vector<std::size_t>> permutation;
    double log_m = 0.0;
};

enum class LemmaMode { Unit, Positive };

/// Structural vs analytic test of the one-nonzero-entry condition on a
/// non-negative vector. In Unit mode the single entry must equal one and the
/// analytic side requires sum-of-squares == square-of-sum == 1; in Positive
/// mode the common value only needs to be positive.
struct LemmaVerdict {
    bool structural = false;
    bool analytic = false;
    LemmaMode mode = LemmaMode::Unit;
};

/// k-th matching factor: ||row k||^2 * ||col k||^2.
double lambda_k(const DenseMatrix& b, std::size_t k);

/// Product of all lambda(k), evaluated in log space.
/// Throws ValidationError if some lambda(k) is zero (zero row or column),
/// since the log is undefined there and such input is not bistochastic.
MatchingProfile matching_factor(const DenseMatrix& b);

/// Normalized k-th matching factor for *-positive matrices:
/// (||row k||^2 / (row sum k)^2) * (||col k||^2 / (col sum k)^2).
double star_lambda_k(const DenseMatrix& a, std::size_t k);

/// Product of all star lambda(k). Throws ValidationError when some row or
/// column has no positive entry (the normalizing sums would vanish).
MatchingProfile star_matching_factor(const DenseMatrix& a);

struct TheoremBounds {
    double log_lower = 0.0;  // -2 n ln n
    double log_upper = 0.0;  // 0
};

TheoremBounds theorem_bounds(std::size_t n);

LemmaVerdict lemma_predicates(std::span<const double> a, LemmaMode mode,
                              const ToleranceConfig& tol = {});

/// Classifies a validated bistochastic matrix as Permutation, Uniform or
/// Interior from its log matching factor.
///
/// The scalar alone never decides: when log_m enters the tolerance band of a
/// bound, the corresponding structure (argmax entries near 1, or all entries
/// near 1/n) is confirmed before the extreme label is returned; failed
/// confirmation yields Interior. The 1x1 matrix is both argmax and argmin
/// and is reported as Degenerate.
ExtremeClass classify_extreme(const DenseMatrix& b, const ToleranceConfig& tol = {});

}  // namespace birk
