#include <cmath>

#include "ckc/causal_kernel.hpp"
#include "ckc/causal_mapping.hpp"
#include "ckc/rng.hpp"
#include "doctest.h"
#include "helpers.hpp"

using ckc::Error;
using ckc::Matrix;
using test_helpers::make_matrix;
using test_helpers::oracle_samples;

TEST_CASE("kappa basics") {
    const Matrix a = make_matrix(2, 2, {1.0, 2.0, 2.0, -1.0});
    const Matrix b = make_matrix(2, 2, {0.5, -1.0, 3.0, 2.0});
    CHECK(ckc::kappa(a, a) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ckc::kappa(a, b) == doctest::Approx(ckc::kappa(b, a)).epsilon(1e-12));

    Matrix scaled = a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) scaled(i, j) *= 7.5;
    CHECK(ckc::kappa(scaled, b) == doctest::Approx(ckc::kappa(a, b)).epsilon(1e-12));

    Matrix negated = a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) negated(i, j) *= -1.0;
    CHECK(ckc::kappa(negated, a) == doctest::Approx(-1.0).epsilon(1e-12));

    CHECK_THROWS_AS(ckc::kappa(a, Matrix(3, 3, 1.0)), Error);
    CHECK_THROWS_AS(ckc::kappa(Matrix(2, 2, 0.0), b), Error);
}

TEST_CASE("kappa of the frozen mapping pair matches the oracle") {
    const Matrix s = oracle_samples();
    const Matrix p0 = ckc::phi(s, 0, 0.05);
    const Matrix p1 = ckc::phi(s, 1, 0.05);
    CHECK(ckc::kappa(p0, p1) == doctest::Approx(0.9305736172649438).epsilon(1e-10));
}

TEST_CASE("mapping_matrices agrees with per-sample phi") {
    const Matrix s = oracle_samples();
    const auto phis = ckc::mapping_matrices(s, 0.05);
    REQUIRE(static_cast<int>(phis.size()) == s.rows());
    for (int i = 0; i < s.rows(); ++i)
        CHECK(test_helpers::max_abs_diff(phis[i], ckc::phi(s, i, 0.05)) <= 1e-12);
}

TEST_CASE("kernel_matrix is a valid cosine Gram matrix") {
    ckc::Rng rng(31);
    Matrix s(12, 3);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 3; ++j) s(i, j) = rng.normal();
    const Matrix k = ckc::kernel_matrix(s, 0.05);
    REQUIRE(k.rows() == 12);
    for (int i = 0; i < 12; ++i) {
        CHECK(k(i, i) == doctest::Approx(1.0).epsilon(1e-12));
        for (int j = 0; j < 12; ++j) {
            CHECK(k(i, j) == doctest::Approx(k(j, i)).epsilon(1e-12));
            CHECK(std::fabs(k(i, j)) <= 1.0 + 1e-12);
        }
    }
    // spot-check one off-diagonal entry against the direct kappa
    const auto phis = ckc::mapping_matrices(s, 0.05);
    CHECK(k(3, 8) == doctest::Approx(ckc::kappa(phis[3], phis[8])).epsilon(1e-12));
}

TEST_CASE("heterogeneity_decision is false for a homogeneous pair of sets") {
    const Matrix s = oracle_samples();
    CHECK_FALSE(ckc::heterogeneity_decision(s, s, 0.05));
    CHECK_THROWS_AS(ckc::heterogeneity_decision(s, Matrix(5, 3, 1.0), 0.05), Error);
}
