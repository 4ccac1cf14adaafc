#include "birk/generate.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "birk/rng.hpp"

namespace birk {

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
    const std::size_t n = map_.size();
    if (n == 0) throw ValidationError("permutation must be non-empty");
    std::vector<bool> seen(n, false);
    for (const std::size_t v : map_) {
        if (v >= n || seen[v]) {
            throw ValidationError("permutation map is not a bijection on {0,...," +
                                  std::to_string(n - 1) + "}");
        }
        seen[v] = true;
    }
}

void SinkhornConfig::validate() const {
    if (max_iters == 0) throw ValidationError("max_iters must be positive");
    if (!(convergence_tol > 0.0)) {
        throw ValidationError("convergence_tol must be positive");
    }
}

DenseMatrix permutation_matrix(const Permutation& p) {
    const std::size_t n = p.size();
    std::vector<double> entries(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) entries[i * n + p(i)] = 1.0;
    return {n, std::move(entries)};
}

DenseMatrix uniform_matrix(std::size_t n) {
    if (n == 0) throw ValidationError("order must be positive");
    return {n, std::vector<double>(n * n, 1.0 / static_cast<double>(n))};
}

namespace {

std::vector<std::size_t> fisher_yates(std::size_t n, SeededRng& rng) {
    std::vector<std::size_t> map(n);
    std::iota(map.begin(), map.end(), std::size_t{0});
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
        std::swap(map[i], map[j]);
    }
    return map;
}

}  // namespace

Permutation random_permutation(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ValidationError("order must be positive");
    SeededRng rng(seed);
    return Permutation(fisher_yates(n, rng));
}

SinkhornResult sinkhorn(const DenseMatrix& a, const SinkhornConfig& cfg) {
    cfg.validate();
    const std::size_t n = a.order();
    for (const double v : a.entries()) {
        if (!(v > 0.0)) {
            throw ValidationError("sinkhorn requires a strictly positive matrix");
        }
    }

    std::vector<double> m = a.entries();
    std::vector<double> sums(n);
    const auto row_pass = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += m[i * n + j];
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] /= s;
        }
    };
    const auto col_pass = [&] {
        sums.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) sums[j] += m[i * n + j];
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] /= sums[j];
        }
    };
    const auto residual = [&] {
        double r = 0.0;
        std::vector<double> rs(n, 0.0), cs(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                rs[i] += m[i * n + j];
                cs[j] += m[i * n + j];
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            r = std::max(r, std::abs(rs[k] - 1.0));
            r = std::max(r, std::abs(cs[k] - 1.0));
        }
        return r;
    };

    double res = 0.0;
    for (std::size_t iter = 1; iter <= cfg.max_iters; ++iter) {
        row_pass();
        col_pass();
        res = residual();
        if (res <= cfg.convergence_tol) {
            return {DenseMatrix(n, std::move(m)), iter, res};
        }
    }
    throw NumericalError("sinkhorn did not converge in " +
                         std::to_string(cfg.max_iters) +
                         " iterations (final residual " + std::to_string(res) + ")");
}

DenseMatrix random_bistochastic(std::size_t n, std::uint64_t seed,
                                const SinkhornConfig& cfg) {
    if (n == 0) throw ValidationError("order must be positive");
    SeededRng rng(seed);
    std::vector<double> entries(n * n);
    for (double& v : entries) v = rng.next_in(0.01, 1.01);
    return sinkhorn(DenseMatrix(n, std::move(entries)), cfg).matrix;
}

DenseMatrix convex_combination(
    std::span<const std::pair<double, Permutation>> terms) {
    if (terms.empty()) throw ValidationError("convex combination needs at least one term");
    const std::size_t n = terms.front().second.size();
    double total = 0.0;
    for (const auto& [w, p] : terms) {
        if (!std::isfinite(w) || w < 0.0) {
            throw ValidationError("weights must be finite and non-negative");
        }
        if (p.size() != n) throw ValidationError("permutation orders differ");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw ValidationError("weights sum to " + std::to_string(total) +
                              ", expected 1 within 1e-12");
    }
    std::vector<double> entries(n * n, 0.0);
    for (const auto& [w, p] : terms) {
        for (std::size_t i = 0; i < n; ++i) entries[i * n + p(i)] += w;
    }
    return {n, std::move(entries)};
}

DenseMatrix star_permutation_random(std::size_t n, std::uint64_t seed,
                                    double lo, double hi) {
    if (n == 0) throw ValidationError("order must be positive");
    if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi)) {
        throw ValidationError("value range requires 0 < lo < hi");
    }
    SeededRng rng(seed);
    const std::vector<std::size_t> map = fisher_yates(n, rng);
    std::vector<double> entries(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) entries[i * n + map[i]] = rng.next_in(lo, hi);
    return {n, std::move(entries)};
}

DenseMatrix star_uniform(std::size_t n, double c) {
    if (n == 0) throw ValidationError("order must be positive");
    if (!std::isfinite(c) || !(c > 0.0)) {
        throw ValidationError("entry value must be positive and finite");
    }
    return {n, std::vector<double>(n * n, c)};
}

DenseMatrix scale(const DenseMatrix& a, double c) {
    if (!std::isfinite(c) || !(c > 0.0)) {
        throw ValidationError("scale factor must be positive and finite");
    }
    std::vector<double> entries = a.entries();
    for (double& v : entries) v *= c;
    return {a.order(), std::move(entries)};
}

}  // namespace birk
