#pragma once

#include <cstdint>
#include <vector>

#include "ckc/matrix.hpp"

namespace ckc {

struct ClusterAssignment {
    std::vector<int> labels;
    int k = 0;
    double inertia = 0.0;
    int iterations = 0;
};

/// Lloyd-style kernel k-means on a precomputed Gram matrix with
/// k-means++ seeding on kernel distances. Ties break toward the lowest
/// cluster index; empty clusters are re-seeded with the point farthest
/// from its centroid.
ClusterAssignment kernel_kmeans(const Matrix& kernel, int k, uint64_t seed, int max_iter = 100);

/// Full pipeline: mapping matrices -> kernel -> kernel k-means.
ClusterAssignment cluster_pipeline(const Matrix& samples, int k, double nu, uint64_t seed,
                                   int max_iter = 100);

/// Plain k-means on raw feature rows (baseline used by benchmarks).
ClusterAssignment raw_kmeans(const Matrix& samples, int k, uint64_t seed, int max_iter = 100);

}  // namespace ckc
