#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "birk/bvn.hpp"
#include "birk/factor.hpp"
#include "birk/generate.hpp"
#include "support.hpp"

using namespace birk;

TEST_CASE("support_matching follows the lowest-index tie-break") {
    const DenseMatrix eye(3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(support_matching(eye, 1e-12).map() == std::vector<std::size_t>{0, 1, 2});

    // row 0 grabs column 0, row 1 column 1, row 2 falls through to column 2
    CHECK(support_matching(support::example_3x3(), 1e-12).map() ==
          std::vector<std::size_t>{0, 1, 2});

    CHECK_THROWS_AS(support_matching(uniform_matrix(2), 0.6), NumericalError);
}

TEST_CASE("bvn_decompose on a vertex yields the single term") {
    const Permutation sigma({3, 1, 0, 2});
    const BvnDecomposition d = bvn_decompose(permutation_matrix(sigma));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].weight == 1.0);
    CHECK(d.terms[0].permutation == sigma);
    CHECK(d.residual_mass == 0.0);
}

TEST_CASE("bvn_decompose traces the worked example deterministically") {
    const BvnDecomposition d = bvn_decompose(support::example_3x3());
    REQUIRE(d.terms.size() == 3);
    CHECK(d.terms[0].permutation.map() == std::vector<std::size_t>{0, 1, 2});
    CHECK(d.terms[1].permutation.map() == std::vector<std::size_t>{1, 2, 0});
    CHECK(d.terms[2].permutation.map() == std::vector<std::size_t>{2, 1, 0});
    for (const BvnTerm& t : d.terms) {
        CHECK(t.weight == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
    const DenseMatrix back = recompose(d);
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(std::abs(back.entries()[i] - support::example_3x3().entries()[i]) <= 1e-12);
    }
}

TEST_CASE("bvn_decompose splits the uniform 2x2 into both vertices") {
    const BvnDecomposition d = bvn_decompose(uniform_matrix(2));
    REQUIRE(d.terms.size() == 2);
    CHECK(d.terms[0].permutation.map() == std::vector<std::size_t>{0, 1});
    CHECK(d.terms[0].weight == 0.5);
    CHECK(d.terms[1].permutation.map() == std::vector<std::size_t>{1, 0});
    CHECK(d.terms[1].weight == 0.5);
}

TEST_CASE("bvn_decompose validates its input") {
    CHECK_THROWS_AS(bvn_decompose(support::star_positive_2x2()), ValidationError);
}

TEST_CASE("bvn_decompose reports an exhausted term cap") {
    CHECK_THROWS_AS(bvn_decompose(uniform_matrix(3), {}, 1), NumericalError);
}

TEST_CASE("round trip over seeded bistochastic matrices") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 2 + seed % 9;  // up to 10
        const DenseMatrix b = random_bistochastic(n, seed);
        const BvnDecomposition d = bvn_decompose(b);

        CHECK(d.terms.size() <= n * n - 2 * n + 2);
        CHECK(d.residual_mass <= 1e-9);

        double weight_total = 0.0;
        std::set<std::vector<std::size_t>> seen;
        for (const BvnTerm& t : d.terms) {
            CHECK(t.weight > 0.0);
            weight_total += t.weight;
            CHECK(seen.insert(t.permutation.map()).second);  // all distinct
        }
        CHECK(std::abs(weight_total + d.residual_mass - 1.0) <= 1e-10);

        const DenseMatrix back = recompose(d);
        for (std::size_t i = 0; i < n * n; ++i) {
            CHECK(std::abs(back.entries()[i] - b.entries()[i]) <= 1e-9);
        }
    }
}

TEST_CASE("single unit term if and only if classified as a vertex") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 2 + seed % 7;
        const DenseMatrix vertex = permutation_matrix(random_permutation(n, seed));
        const DenseMatrix interior = random_bistochastic(n, seed);
        for (const DenseMatrix& b : {vertex, interior}) {
            const BvnDecomposition d = bvn_decompose(b);
            const bool single_unit =
                d.terms.size() == 1 && std::abs(d.terms[0].weight - 1.0) <= 1e-12;
            const bool is_vertex =
                classify_extreme(b).kind == ExtremeKind::Permutation;
            CHECK(single_unit == is_vertex);
        }
    }
}

TEST_CASE("recompose of a single term is the permutation matrix") {
    const Permutation sigma({1, 2, 0});
    BvnDecomposition d;
    d.n = 3;
    d.terms.push_back({1.0, sigma});
    CHECK(recompose(d).entries() == permutation_matrix(sigma).entries());
}

TEST_CASE("order-1 decomposition") {
    const BvnDecomposition d = bvn_decompose(DenseMatrix(1, {1.0}));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].weight == 1.0);
    CHECK(d.residual_mass == 0.0);
}
