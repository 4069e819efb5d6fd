#include "ckc/stability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "ckc/eval_metrics.hpp"

namespace ckc {

namespace {

constexpr double kRidgeFallback = 1e-6;

// Solve A x = b (A symmetric positive definite-ish) by Gaussian elimination
// with partial pivoting; retries once with a ridge term on near-singular A.
std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
    const int n = a.rows();
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
        if (std::fabs(a(pivot, col)) < 1e-12) {
            for (int d = 0; d < n; ++d) a(d, d) += kRidgeFallback;
            return solve_linear(std::move(a), std::move(b));
        }
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
            std::swap(b[col], b[pivot]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= a(r, c) * x[c];
        x[r] = s / a(r, r);
    }
    return x;
}

// OLS with intercept over the given row subset; returns intercept + m slopes.
std::vector<double> fit_ols(const Matrix& samples, std::span<const double> target,
                            const std::vector<int>& rows, const std::vector<int>& features) {
    const int p = static_cast<int>(features.size()) + 1;
    Matrix xtx(p, p);
    std::vector<double> xty(p, 0.0);
    for (int row : rows) {
        std::vector<double> x(p);
        x[0] = 1.0;
        for (size_t f = 0; f < features.size(); ++f) x[f + 1] = samples(row, features[f]);
        for (int a = 0; a < p; ++a) {
            xty[a] += x[a] * target[row];
            for (int b = 0; b < p; ++b) xtx(a, b) += x[a] * x[b];
        }
    }
    return solve_linear(std::move(xtx), std::move(xty));
}

std::vector<double> predict(const Matrix& samples, const std::vector<double>& beta,
                            const std::vector<int>& rows, const std::vector<int>& features) {
    std::vector<double> out;
    out.reserve(rows.size());
    for (int row : rows) {
        double v = beta[0];
        for (size_t f = 0; f < features.size(); ++f) v += beta[f + 1] * samples(row, features[f]);
        out.push_back(v);
    }
    return out;
}

std::map<int, std::vector<int>> group_rows(std::span<const int> labels) {
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(static_cast<int>(i));
    return groups;
}

}  // namespace

SubgroupCoefficients subgroup_regression(const Matrix& samples, std::span<const double> target,
                                         std::span<const int> labels) {
    if (static_cast<int>(target.size()) != samples.rows() ||
        static_cast<int>(labels.size()) != samples.rows())
        throw Error(ErrorCode::LengthMismatch, "target/labels must match sample count");

    const int m = samples.cols();
    std::vector<int> all_features(m);
    std::iota(all_features.begin(), all_features.end(), 0);

    SubgroupCoefficients out;
    std::vector<std::vector<double>> rows_of_beta;
    for (const auto& [label, rows] : group_rows(labels)) {
        if (static_cast<int>(rows.size()) <= m + 1) {
            out.skipped.push_back(label);
            continue;
        }
        rows_of_beta.push_back(fit_ols(samples, target, rows, all_features));
        out.subgroup_ids.push_back(label);
    }
    if (rows_of_beta.empty())
        throw Error(ErrorCode::AllSubgroupsTooSmall, "no subgroup has more than m + 1 samples");

    out.beta = Matrix(static_cast<int>(rows_of_beta.size()), m + 1);
    for (size_t r = 0; r < rows_of_beta.size(); ++r)
        for (int c = 0; c <= m; ++c) out.beta(static_cast<int>(r), c) = rows_of_beta[r][c];
    return out;
}

std::vector<std::vector<double>> feature_vectors(const SubgroupCoefficients& coeffs) {
    const int k = coeffs.beta.rows();
    if (k < 2) throw Error(ErrorCode::TooFewSubgroups, "need at least 2 subgroup coefficient rows");
    const int m = coeffs.beta.cols() - 1;
    std::vector<std::vector<double>> vectors(m, std::vector<double>(k));
    for (int p = 0; p < m; ++p)
        for (int g = 0; g < k; ++g) vectors[p][g] = coeffs.beta(g, p + 1);
    return vectors;
}

StabilityRanking stability_ranking(const std::vector<std::vector<double>>& vectors) {
    StabilityRanking out;
    out.variances.reserve(vectors.size());
    for (const auto& v : vectors) {
        const double n = static_cast<double>(v.size());
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= n;
        double var = 0.0;
        for (double x : v) var += (x - mean) * (x - mean);
        out.variances.push_back(n > 1 ? var / (n - 1) : 0.0);
    }
    out.order.resize(vectors.size());
    std::iota(out.order.begin(), out.order.end(), 0);
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](int a, int b) { return out.variances[a] < out.variances[b]; });
    return out;
}

StaErrorResult sta_error_eval(const Matrix& samples, std::span<const double> target,
                              std::span<const int> labels, int top_k) {
    if (top_k < 1 || top_k > samples.cols())
        throw Error(ErrorCode::OutOfDomain, "top_k must lie in [1, m]");

    const auto coeffs = subgroup_regression(samples, target, labels);
    if (coeffs.beta.rows() < 3)
        throw Error(ErrorCode::TooFewSubgroups, "round-robin holdout needs at least 3 usable subgroups");

    const auto ranking = stability_ranking(feature_vectors(coeffs));
    std::vector<int> features(ranking.order.begin(), ranking.order.begin() + top_k);
    std::sort(features.begin(), features.end());

    const auto groups = group_rows(labels);
    double train_total = 0.0, test_total = 0.0;
    int rounds = 0;
    for (int held : coeffs.subgroup_ids) {
        std::vector<int> train_rows, test_rows;
        for (int id : coeffs.subgroup_ids) {
            const auto& rows = groups.at(id);
            auto& dst = id == held ? test_rows : train_rows;
            dst.insert(dst.end(), rows.begin(), rows.end());
        }
        const auto beta = fit_ols(samples, target, train_rows, features);

        const auto train_pred = predict(samples, beta, train_rows, features);
        std::vector<double> train_truth;
        for (int r : train_rows) train_truth.push_back(target[r]);
        train_total += rmse(train_truth, train_pred);

        const auto test_pred = predict(samples, beta, test_rows, features);
        std::vector<double> test_truth;
        for (int r : test_rows) test_truth.push_back(target[r]);
        test_total += rmse(test_truth, test_pred);
        ++rounds;
    }
    return {train_total / rounds, test_total / rounds};
}

}  // namespace ckc
