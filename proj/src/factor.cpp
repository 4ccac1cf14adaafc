#include "birk/factor.hpp"

#include <cmath>
#include <string>

namespace birk {

namespace {

double checked_log_lambda(double row_norm_sq, double col_norm_sq, std::size_t k) {
    if (row_norm_sq == 0.0 || col_norm_sq == 0.0) {
        throw ValidationError("lambda(" + std::to_string(k) +
                              ") is zero: row or column " + std::to_string(k) +
                              " has no nonzero entry");
    }
    // log of the product via the factors: immune to underflow of the product
    return std::log(row_norm_sq) + std::log(col_norm_sq);
}

// (||row||^2 / rs) / rs * (||col||^2 / cs) / cs. Each axis ratio lies in
// [1/n, 1] for any representable positive sums, so the result never
// under/overflows regardless of the matrix's global scale.
double star_lambda_from(double row_norm_sq, double row_sum, double col_norm_sq,
                        double col_sum, std::size_t k) {
    if (row_sum == 0.0 || col_sum == 0.0) {
        throw ValidationError("matrix is not *-positive: row or column " +
                              std::to_string(k) + " has no positive entry");
    }
    return ((row_norm_sq / row_sum) / row_sum) * ((col_norm_sq / col_sum) / col_sum);
}

MatchingProfile profile_from_lambdas(std::size_t n, std::vector<double> lambdas,
                                     std::vector<double> log_lambdas,
                                     FactorVariant variant) {
    MatchingProfile p;
    p.n = n;
    p.lambdas = std::move(lambdas);
    p.log_lambdas = std::move(log_lambdas);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += p.log_lambdas[k];
    p.log_m = acc;
    p.m_linear = std::exp(acc);
    const TheoremBounds b = theorem_bounds(n);
    p.log_lower_bound = b.log_lower;
    p.log_upper_bound = b.log_upper;
    p.variant = variant;
    return p;
}

}  // namespace

double lambda_k(const DenseMatrix& b, std::size_t k) {
    const std::size_t n = b.order();
    if (k >= n) {
        throw std::out_of_range("lambda index " + std::to_string(k) +
                                " out of range for order " + std::to_string(n));
    }
    double row_norm_sq = 0.0, col_norm_sq = 0.0;
    for (std::size_t j = 0; j < n; ++j) row_norm_sq += b(k, j) * b(k, j);
    for (std::size_t i = 0; i < n; ++i) col_norm_sq += b(i, k) * b(i, k);
    return row_norm_sq * col_norm_sq;
}

MatchingProfile matching_factor(const DenseMatrix& b) {
    const std::size_t n = b.order();
    const Marginals mg = marginals(b);
    std::vector<double> lambdas(n), logs(n);
    for (std::size_t k = 0; k < n; ++k) {
        logs[k] = checked_log_lambda(mg.row_norms_sq[k], mg.col_norms_sq[k], k);
        lambdas[k] = mg.row_norms_sq[k] * mg.col_norms_sq[k];
    }
    return profile_from_lambdas(n, std::move(lambdas), std::move(logs),
                                FactorVariant::Plain);
}

double star_lambda_k(const DenseMatrix& a, std::size_t k) {
    const std::size_t n = a.order();
    if (k >= n) {
        throw std::out_of_range("lambda index " + std::to_string(k) +
                                " out of range for order " + std::to_string(n));
    }
    const Marginals mg = marginals(a);
    return star_lambda_from(mg.row_norms_sq[k], mg.row_sums[k],
                            mg.col_norms_sq[k], mg.col_sums[k], k);
}

MatchingProfile star_matching_factor(const DenseMatrix& a) {
    const std::size_t n = a.order();
    const Marginals mg = marginals(a);
    std::vector<double> lambdas(n), logs(n);
    for (std::size_t k = 0; k < n; ++k) {
        lambdas[k] = star_lambda_from(mg.row_norms_sq[k], mg.row_sums[k],
                                      mg.col_norms_sq[k], mg.col_sums[k], k);
        logs[k] = std::log(lambdas[k]);
    }
    return profile_from_lambdas(n, std::move(lambdas), std::move(logs),
                                FactorVariant::Star);
}

TheoremBounds theorem_bounds(std::size_t n) {
    if (n == 0) throw ValidationError("order must be positive");
    // + 0.0 normalizes the n = 1 case to +0.0
    const double lower =
        -2.0 * static_cast<double>(n) * std::log(static_cast<double>(n)) + 0.0;
    return {lower, 0.0};
}

LemmaVerdict lemma_predicates(std::span<const double> a, LemmaMode mode,
                              const ToleranceConfig& tol) {
    tol.validate();
    for (const double v : a) {
        if (!std::isfinite(v) || !(v >= 0.0)) {
            throw ValidationError("lemma input must be finite and non-negative");
        }
    }
    double sum = 0.0, sum_sq = 0.0;
    std::size_t positive = 0;
    double single_value = 0.0;
    for (const double v : a) {
        sum += v;
        sum_sq += v * v;
        if (v > tol.zero_tol) {
            ++positive;
            single_value = v;
        }
    }
    const double square_of_sum = sum * sum;

    LemmaVerdict verdict;
    verdict.mode = mode;
    const bool exactly_one = positive == 1;
    const bool sums_agree = std::abs(sum_sq - square_of_sum) <= tol.sum_tol;
    if (mode == LemmaMode::Unit) {
        verdict.structural =
            exactly_one && std::abs(single_value - 1.0) <= tol.sum_tol;
        verdict.analytic = sums_agree && std::abs(sum_sq - 1.0) <= tol.sum_tol &&
                           std::abs(square_of_sum - 1.0) <= tol.sum_tol;
    } else {
        verdict.structural = exactly_one;
        verdict.analytic = sums_agree && square_of_sum > 0.0;
    }
    return verdict;
}

ExtremeClass classify_extreme(const DenseMatrix& b, const ToleranceConfig& tol) {
    const ClassificationReport report = classify(b, tol);
    if (!report.is_bistochastic) {
        throw ValidationError("matrix is not bistochastic within tolerance (max sum residual " +
                              std::to_string(report.max_sum_residual) + ")");
    }
    const std::size_t n = b.order();
    const MatchingProfile profile = matching_factor(b);

    ExtremeClass out;
    out.log_m = profile.log_m;
    if (n == 1) {
        out.kind = ExtremeKind::Degenerate;
        return out;
    }

    if (profile.log_m >= -tol.class_log_tol) {
        // candidate argmax: extract per-row argmax, then confirm structure
        std::vector<std::size_t> perm(n, 0);
        std::vector<bool> taken(n, false);
        bool confirmed = true;
        for (std::size_t i = 0; i < n && confirmed; ++i) {
            std::size_t best = 0;
            for (std::size_t j = 1; j < n; ++j) {
                if (b(i, j) > b(i, best)) best = j;
            }
            if (taken[best] || std::abs(b(i, best) - 1.0) > tol.sum_tol) {
                confirmed = false;  // the log band admitted a false positive
            } else {
                taken[best] = true;
                perm[i] = best;
            }
        }
        if (confirmed) {
            out.kind = ExtremeKind::Permutation;
            out.permutation = std::move(perm);
            return out;
        }
    } else if (profile.log_m <= profile.log_lower_bound + tol.class_log_tol) {
        const double inv_n = 1.0 / static_cast<double>(n);
        bool confirmed = true;
        for (const double v : b.entries()) {
            if (std::abs(v - inv_n) > tol.sum_tol) {
                confirmed = false;
                break;
            }
        }
        if (confirmed) {
            out.kind = ExtremeKind::Uniform;
            return out;
        }
    }
    out.kind = ExtremeKind::Interior;
    return out;
}

}  // namespace birk
