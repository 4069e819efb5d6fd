#pragma once

#include <span>
#include <vector>

#include "ckc/matrix.hpp"

namespace ckc {

struct SubgroupCoefficients {
    Matrix beta;                      // one row per used subgroup: intercept + m slopes
    std::vector<int> subgroup_ids;    // cluster label backing each row
    std::vector<int> skipped;         // subgroups below the size floor
};

struct StabilityRanking {
    std::vector<double> variances;  // per feature, cross-subgroup coefficient variance
    std::vector<int> order;         // feature indices, ascending variance, ties by index
};

struct StaErrorResult {
    double rmse_train = 0.0;
    double sta_error = 0.0;  // held-out-subgroup RMSE, round-robin average
};

/// Per-subgroup ordinary least squares with intercept. Subgroups with at
/// most m + 1 samples are skipped and recorded; a small ridge term backs
/// up rank-deficient designs.
SubgroupCoefficients subgroup_regression(const Matrix& samples, std::span<const double> target,
                                         std::span<const int> labels);

/// Per-feature coefficient vectors across subgroups (intercept excluded):
/// one length-K vector per feature.
std::vector<std::vector<double>> feature_vectors(const SubgroupCoefficients& coeffs);

/// Sample variance of each feature vector, ranked ascending.
StabilityRanking stability_ranking(const std::vector<std::vector<double>>& vectors);

/// Round-robin subgroup holdout: fit on the pooled remaining subgroups with
/// the top_k most stable features, evaluate on the held-out subgroup.
StaErrorResult sta_error_eval(const Matrix& samples, std::span<const double> target,
                              std::span<const int> labels, int top_k);

}  // namespace ckc
