#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <map>

#include "birk/factor.hpp"
#include "birk/generate.hpp"
#include "support.hpp"

using namespace birk;

TEST_CASE("permutation_matrix places unit entries by the map") {
    CHECK(permutation_matrix(Permutation({0, 1})).entries() ==
          std::vector<double>{1, 0, 0, 1});
    CHECK(permutation_matrix(Permutation({1, 0})).entries() ==
          std::vector<double>{0, 1, 1, 0});
    CHECK(permutation_matrix(Permutation({1, 2, 0})).entries() ==
          std::vector<double>{0, 1, 0, 0, 0, 1, 1, 0, 0});
    CHECK(classify(permutation_matrix(Permutation({1, 2, 0}))).is_permutation);
}

TEST_CASE("Permutation rejects non-bijections") {
    CHECK_THROWS_AS(Permutation({0, 0}), ValidationError);
    CHECK_THROWS_AS(Permutation({2, 0}), ValidationError);
    CHECK_THROWS_AS(Permutation({}), ValidationError);
}

TEST_CASE("uniform_matrix") {
    CHECK(uniform_matrix(2).entries() == std::vector<double>{0.5, 0.5, 0.5, 0.5});
    CHECK(uniform_matrix(3)(1, 2) == 1.0 / 3.0);
    CHECK(uniform_matrix(1).entries() == std::vector<double>{1.0});
    CHECK(classify(uniform_matrix(3)).is_uniform);
    CHECK_THROWS_AS(uniform_matrix(0), ValidationError);
}

TEST_CASE("random_permutation is deterministic per (n, seed)") {
    CHECK(random_permutation(1, 42).map() == std::vector<std::size_t>{0});
    CHECK(random_permutation(5, 7).map() == random_permutation(5, 7).map());

    bool saw_difference = false;
    for (std::uint64_t seed = 0; seed < 8 && !saw_difference; ++seed) {
        saw_difference = random_permutation(8, seed).map() !=
                         random_permutation(8, seed + 1).map();
    }
    CHECK(saw_difference);
}

TEST_CASE("random_permutation draws are close to uniform at n = 3") {
    std::map<std::vector<std::size_t>, int> counts;
    const int draws = 10000;
    for (int s = 0; s < draws; ++s) {
        counts[random_permutation(3, static_cast<std::uint64_t>(s)).map()]++;
    }
    CHECK(counts.size() == 6);
    for (const auto& [map, count] : counts) {
        const double freq = static_cast<double>(count) / draws;
        CHECK(std::abs(freq - 1.0 / 6.0) <= 0.02);
    }
}

TEST_CASE("sinkhorn leaves a bistochastic matrix essentially unchanged") {
    const SinkhornResult r = sinkhorn(uniform_matrix(3));
    CHECK(r.iters_used <= 2);
    for (const double v : r.matrix.entries()) {
        CHECK(std::abs(v - 1.0 / 3.0) <= 1e-15);
    }
    CHECK(r.final_residual <= 1e-12);
}

TEST_CASE("sinkhorn hits the analytic 2x2 fixed point") {
    // limit of [[1,2],[3,4]] solves (1-p)^2/p^2 = 6/4
    const SinkhornResult r = sinkhorn(DenseMatrix(2, {1, 2, 3, 4}));
    const double p = 1.0 / (1.0 + std::sqrt(1.5));
    CHECK(std::abs(r.matrix(0, 0) - p) <= 1e-9);
    CHECK(std::abs(r.matrix(0, 1) - (1.0 - p)) <= 1e-9);
    CHECK(std::abs(r.matrix(1, 0) - (1.0 - p)) <= 1e-9);
    CHECK(std::abs(r.matrix(1, 1) - p) <= 1e-9);
    CHECK(classify(r.matrix).is_bistochastic);
}

TEST_CASE("sinkhorn absorbs a global scale") {
    const SinkhornResult r = sinkhorn(scale(uniform_matrix(3), 7.0));
    for (const double v : r.matrix.entries()) {
        CHECK(std::abs(v - 1.0 / 3.0) <= 1e-15);
    }
}

TEST_CASE("sinkhorn error paths") {
    CHECK_THROWS_AS(sinkhorn(DenseMatrix(2, {1, 0, 1, 1})), ValidationError);
    SinkhornConfig strict;
    strict.max_iters = 1;
    CHECK_THROWS_AS(sinkhorn(DenseMatrix(2, {1, 2, 3, 4}), strict), NumericalError);
    SinkhornConfig bad;
    bad.convergence_tol = 0.0;
    CHECK_THROWS_AS(sinkhorn(uniform_matrix(2), bad), ValidationError);
}

TEST_CASE("random_bistochastic is deterministic and lands inside the polytope") {
    CHECK(random_bistochastic(1, 9).entries() == std::vector<double>{1.0});
    CHECK(random_bistochastic(4, 21).entries() ==
          random_bistochastic(4, 21).entries());

    const DenseMatrix b = random_bistochastic(4, 5);
    CHECK(classify(b).is_bistochastic);
    const MatchingProfile p = matching_factor(b);
    CHECK(p.log_m < -1e-9);
    CHECK(p.log_m > p.log_lower_bound + 1e-9);
}

TEST_CASE("convex_combination reassembles the worked example") {
    const std::vector<std::pair<double, Permutation>> terms{
        {1.0 / 3.0, Permutation({0, 1, 2})},
        {1.0 / 3.0, Permutation({1, 2, 0})},
        {1.0 / 3.0, Permutation({2, 1, 0})},
    };
    CHECK(convex_combination(terms).entries() == support::example_3x3().entries());

    const std::vector<std::pair<double, Permutation>> single{
        {1.0, Permutation({2, 0, 1})}};
    CHECK(convex_combination(single).entries() ==
          permutation_matrix(Permutation({2, 0, 1})).entries());

    const std::vector<std::pair<double, Permutation>> halves{
        {0.5, Permutation({0, 1})}, {0.5, Permutation({1, 0})}};
    CHECK(convex_combination(halves).entries() == uniform_matrix(2).entries());
}

TEST_CASE("convex_combination validates weights and orders") {
    const std::vector<std::pair<double, Permutation>> short_weights{
        {0.5, Permutation({0, 1})}};
    CHECK_THROWS_AS(convex_combination(short_weights), ValidationError);

    const std::vector<std::pair<double, Permutation>> mismatch{
        {0.5, Permutation({0, 1})}, {0.5, Permutation({0, 1, 2})}};
    CHECK_THROWS_AS(convex_combination(mismatch), ValidationError);

    const std::vector<std::pair<double, Permutation>> negative{
        {1.5, Permutation({0, 1})}, {-0.5, Permutation({1, 0})}};
    CHECK_THROWS_AS(convex_combination(negative), ValidationError);

    CHECK_THROWS_AS(
        convex_combination(std::span<const std::pair<double, Permutation>>{}),
        ValidationError);
}

TEST_CASE("interior combinations sit strictly below the maximum") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Permutation a = random_permutation(5, seed);
        const Permutation b = random_permutation(5, seed + 100);
        if (a == b) continue;
        const std::vector<std::pair<double, Permutation>> terms{{0.3, a}, {0.7, b}};
        CHECK(matching_factor(convex_combination(terms)).log_m < -1e-9);
    }
}

TEST_CASE("star_permutation_random generates *-permutation matrices") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DenseMatrix a = star_permutation_random(5, seed, 0.1, 4.0);
        CHECK(classify(a).is_star_permutation);
        CHECK(std::abs(star_matching_factor(a).log_m) <= 1e-12);
    }
    CHECK(star_permutation_random(4, 3, 0.5, 2.0).entries() ==
          star_permutation_random(4, 3, 0.5, 2.0).entries());
    CHECK_THROWS_AS(star_permutation_random(3, 0, 0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(star_permutation_random(3, 0, 2.0, 1.0), ValidationError);
}

TEST_CASE("star_uniform reaches the star-variant lower bound") {
    const DenseMatrix su = star_uniform(2, 1.0 / 6.0);
    CHECK(su.entries() == std::vector<double>(4, 1.0 / 6.0));
    CHECK(classify(su).is_star_uniform);
    CHECK(star_uniform(3, 1.0).entries() == std::vector<double>(9, 1.0));

    const std::size_t n = 5;
    const double expected = -2.0 * static_cast<double>(n) * std::log(static_cast<double>(n));
    CHECK(std::abs(star_matching_factor(star_uniform(n, 0.37)).log_m - expected) <= 1e-9);

    CHECK_THROWS_AS(star_uniform(3, 0.0), ValidationError);
    CHECK_THROWS_AS(star_uniform(3, -2.0), ValidationError);
}

TEST_CASE("scale multiplies entrywise and validates the factor") {
    const DenseMatrix u = uniform_matrix(3);
    CHECK(scale(u, 1.0).entries() == u.entries());
    CHECK(scale(u, 3.0).entries() == std::vector<double>(9, 1.0));
    CHECK_THROWS_AS(scale(u, 0.0), ValidationError);
    CHECK_THROWS_AS(scale(u, -1.0), ValidationError);
    CHECK_THROWS_AS(scale(u, std::nan("")), ValidationError);
}
