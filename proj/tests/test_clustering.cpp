#include <vector>

#include "ckc/clustering.hpp"
#include "ckc/eval_metrics.hpp"
#include "ckc/synth.hpp"
#include "doctest.h"
#include "helpers.hpp"

using ckc::Error;
using ckc::Matrix;

namespace {

Matrix linear_gram(const Matrix& points) {
    const int n = points.rows();
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int f = 0; f < points.cols(); ++f) s += points(i, f) * points(j, f);
            g(i, j) = s;
        }
    return g;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    return ckc::adjusted_rand_index(a, b) == doctest::Approx(1.0);
}

}  // namespace

TEST_CASE("kernel_kmeans separates two obvious blobs") {
    const Matrix points = test_helpers::make_matrix(6, 1, {0.0, 0.1, 0.2, 10.0, 10.1, 10.2});
    const auto result = ckc::kernel_kmeans(linear_gram(points), 2, 3, 100);
    CHECK(result.k == 2);
    CHECK(result.labels.size() == 6);
    CHECK(same_partition(result.labels, {0, 0, 0, 1, 1, 1}));
    CHECK(result.inertia < 0.1);
    CHECK(result.iterations >= 1);
}

TEST_CASE("raw_kmeans separates the same blobs") {
    const Matrix points = test_helpers::make_matrix(6, 1, {0.0, 0.1, 0.2, 10.0, 10.1, 10.2});
    const auto result = ckc::raw_kmeans(points, 2, 3, 100);
    CHECK(same_partition(result.labels, {0, 0, 0, 1, 1, 1}));
}

TEST_CASE("kernel_kmeans is deterministic for a fixed seed") {
    const Matrix points =
        test_helpers::make_matrix(8, 1, {0.0, 0.4, 1.1, 5.0, 5.2, 9.0, 9.3, 9.4});
    const Matrix gram = linear_gram(points);
    const auto a = ckc::kernel_kmeans(gram, 3, 42, 100);
    const auto b = ckc::kernel_kmeans(gram, 3, 42, 100);
    CHECK(a.labels == b.labels);
    CHECK(a.inertia == b.inertia);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("kernel_kmeans input validation") {
    const Matrix gram = linear_gram(test_helpers::make_matrix(4, 1, {0.0, 1.0, 2.0, 3.0}));
    CHECK_THROWS_AS(ckc::kernel_kmeans(gram, 1, 0, 100), Error);
    CHECK_THROWS_AS(ckc::kernel_kmeans(gram, 5, 0, 100), Error);
    CHECK_THROWS_AS(ckc::kernel_kmeans(Matrix(), 2, 0, 100), Error);
    CHECK_THROWS_AS(ckc::kernel_kmeans(gram, 2, 0, 0), Error);
}

TEST_CASE("every cluster stays non-empty") {
    const Matrix points =
        test_helpers::make_matrix(7, 1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 50.0});
    const auto result = ckc::kernel_kmeans(linear_gram(points), 3, 1, 100);
    std::vector<int> counts(3, 0);
    for (int v : result.labels) ++counts[v];
    for (int c : counts) CHECK(c > 0);
}

TEST_CASE("cluster_pipeline recovers the two-group benchmark for a good seed") {
    const auto data = ckc::chain_vs_empty(100, 5, 2.0, 3.0, false, 0.0, ckc::MuMode::Zero, 6);
    const auto result = ckc::cluster_pipeline(data.samples, 2, 0.05, 6, 100);
    CHECK(ckc::adjusted_rand_index(data.labels, result.labels) > 0.1);

    const auto rerun = ckc::cluster_pipeline(data.samples, 2, 0.05, 6, 100);
    CHECK(result.labels == rerun.labels);
}
