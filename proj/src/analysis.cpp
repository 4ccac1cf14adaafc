#include "birk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "birk/generate.hpp"
#include "birk/rng.hpp"

namespace birk {

namespace {

// C = A * B, plain triple loop, ascending inner index
std::vector<double> multiply(const std::vector<double>& a,
                             const std::vector<double>& b, std::size_t n) {
    std::vector<double> c(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a[i * n + k];
            for (std::size_t j = 0; j < n; ++j) {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    return c;
}

double max_sum_deviation(const std::vector<double>& m, std::size_t n) {
    double worst = 0.0;
    std::vector<double> col_sums(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            row_sum += m[i * n + j];
            col_sums[j] += m[i * n + j];
        }
        worst = std::max(worst, std::abs(row_sum - 1.0));
    }
    for (std::size_t j = 0; j < n; ++j) {
        worst = std::max(worst, std::abs(col_sums[j] - 1.0));
    }
    return worst;
}

}  // namespace

TrajectoryRecord power_trajectory(const DenseMatrix& b, std::size_t t_max,
                                  double limit_tol, const ToleranceConfig& tol) {
    if (t_max == 0) throw ValidationError("t_max must be at least 1");
    if (!(limit_tol > 0.0)) throw ValidationError("limit_tol must be positive");
    const ClassificationReport report = classify(b, tol);
    if (!report.is_bistochastic) {
        throw ValidationError("trajectory requires a bistochastic matrix");
    }
    const std::size_t n = b.order();

    TrajectoryRecord record;
    record.n = n;
    record.samples.reserve(t_max);

    std::vector<double> power = b.entries();
    for (std::size_t t = 1; t <= t_max; ++t) {
        if (t > 1) power = multiply(power, b.entries(), n);
        // roundoff budget grows with the number of multiplications
        const double drift_tol =
            tol.sum_tol + static_cast<double>(t) * 1e-12 * static_cast<double>(n);
        if (max_sum_deviation(power, n) > drift_tol) {
            throw NumericalError("power " + std::to_string(t) +
                                 " drifted off the bistochastic constraint beyond " +
                                 std::to_string(drift_tol));
        }
        const MatchingProfile profile = matching_factor(DenseMatrix(n, power));
        record.samples.push_back({t, profile.log_m});
    }
    const double limit = theorem_bounds(n).log_lower;
    record.converged = std::abs(record.samples.back().log_m - limit) <= limit_tol;
    return record;
}

double permutation_proximity(const MatchingProfile& profile) {
    if (profile.variant != FactorVariant::Plain) {
        throw ValidationError("proximity is defined for the plain variant only");
    }
    if (profile.n == 0) throw ValidationError("profile order must be positive");
    if (profile.n == 1) return 1.0;
    const double denom = 2.0 * static_cast<double>(profile.n) *
                         std::log(static_cast<double>(profile.n));
    return std::clamp(1.0 + profile.log_m / denom, 0.0, 1.0);
}

double closed_form_m_n2(double p) {
    if (!(p >= 0.0) || !(p <= 1.0)) {
        throw ValidationError("p must lie in [0, 1]");
    }
    const double q = p * p + (1.0 - p) * (1.0 - p);
    const double q2 = q * q;
    return q2 * q2;
}

OracleResult oracle_grid_scan(std::size_t n, std::size_t resolution,
                              std::uint64_t seed) {
    if (n != 2 && n != 3) throw ValidationError("oracle scan supports n = 2 or 3 only");
    if (resolution < 2) throw ValidationError("resolution must be at least 2");

    enum class Point { Vertex, Uniform, Sample };
    std::vector<std::pair<double, Point>> scanned;

    if (n == 2) {
        scanned.reserve(resolution);
        const double step = 1.0 / static_cast<double>(resolution - 1);
        for (std::size_t i = 0; i < resolution; ++i) {
            const double p = static_cast<double>(i) * step;
            const Point kind = (i == 0 || i + 1 == resolution) ? Point::Vertex
                               : p == 0.5                      ? Point::Uniform
                                                               : Point::Sample;
            scanned.emplace_back(std::log(closed_form_m_n2(p)), kind);
        }
    } else {
        // all six vertices, the uniform point, then seeded interior samples
        // drawn as flat-Dirichlet combinations of the vertices
        std::vector<Permutation> vertices;
        vertices.reserve(6);
        for (const auto& map :
             {std::vector<std::size_t>{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
              {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}) {
            vertices.emplace_back(map);
        }
        scanned.reserve(resolution + 7);
        for (const Permutation& p : vertices) {
            scanned.emplace_back(matching_factor(permutation_matrix(p)).log_m,
                                 Point::Vertex);
        }
        scanned.emplace_back(matching_factor(uniform_matrix(3)).log_m,
                             Point::Uniform);
        SeededRng rng(seed);
        std::vector<std::pair<double, Permutation>> terms;
        for (std::size_t s = 0; s < resolution; ++s) {
            terms.clear();
            double total = 0.0;
            for (const Permutation& p : vertices) {
                const double e = -std::log1p(-rng.next_unit());  // Exp(1), safe at 0
                terms.emplace_back(e, p);
                total += e;
            }
            for (auto& [w, p] : terms) w /= total;
            scanned.emplace_back(matching_factor(convex_combination(terms)).log_m,
                                 Point::Sample);
        }
    }

    OracleResult result;
    result.points_scanned = scanned.size();
    result.min_log_m = scanned.front().first;
    result.max_log_m = scanned.front().first;
    for (const auto& [v, kind] : scanned) {
        result.min_log_m = std::min(result.min_log_m, v);
        result.max_log_m = std::max(result.max_log_m, v);
    }
    // an extreme "occurs at" a point class when every scanned point within
    // 1e-12 of the extreme belongs to that class
    constexpr double tie_tol = 1e-12;
    bool min_all_uniform = true, min_seen = false;
    bool max_all_vertex = true, max_seen = false;
    for (const auto& [v, kind] : scanned) {
        if (v <= result.min_log_m + tie_tol) {
            min_all_uniform = min_all_uniform && kind == Point::Uniform;
            min_seen = true;
        }
        if (v >= result.max_log_m - tie_tol) {
            max_all_vertex = max_all_vertex && kind == Point::Vertex;
            max_seen = true;
        }
    }
    result.argmin_is_uniform = min_seen && min_all_uniform;
    result.argmax_is_vertex = max_seen && max_all_vertex;
    return result;
}

}  // namespace birk
