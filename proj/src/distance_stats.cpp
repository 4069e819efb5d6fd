#include "ckc/distance_stats.hpp"

#include <cmath>
#include <string>

namespace ckc {

void check_sample_matrix(const Matrix& samples) {
    if (samples.rows() < 4)
        throw Error(ErrorCode::DimensionTooSmall, "need at least 4 samples, got " + std::to_string(samples.rows()));
    if (samples.cols() < 2)
        throw Error(ErrorCode::DimensionTooSmall, "need at least 2 features, got " + std::to_string(samples.cols()));
    for (double v : samples.storage())
        if (!std::isfinite(v)) throw Error(ErrorCode::OutOfDomain, "non-finite sample value");
}

Matrix pairwise_distance(std::span<const double> x) {
    const int n = static_cast<int>(x.size());
    Matrix d(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            const double v = std::fabs(x[i] - x[j]);
            d(i, j) = v;
            d(j, i) = v;
        }
    }
    return d;
}

std::vector<Matrix> distance_tensor(const Matrix& samples) {
    std::vector<Matrix> slices;
    slices.reserve(samples.cols());
    for (int j = 0; j < samples.cols(); ++j) slices.push_back(pairwise_distance(samples.column(j)));
    return slices;
}

Matrix u_center(const Matrix& m) {
    const int d = m.rows();
    if (d != m.cols()) throw Error(ErrorCode::ShapeMismatch, "u_center needs a square matrix");
    if (d < 3) throw Error(ErrorCode::DimensionTooSmall, "u_center needs dimension >= 3, got " + std::to_string(d));

    std::vector<double> row_sum(d, 0.0), col_sum(d, 0.0);
    double total = 0.0;
    for (int s = 0; s < d; ++s) {
        for (int t = 0; t < d; ++t) {
            const double v = m(s, t);
            row_sum[s] += v;
            col_sum[t] += v;
            total += v;
        }
    }

    const double inv = 1.0 / (d - 2);
    const double inv2 = 1.0 / (static_cast<double>(d - 1) * (d - 2));
    Matrix out(d, d);
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t)
            out(s, t) = m(s, t) - inv * col_sum[t] - inv * row_sum[s] + inv2 * total;
    for (int s = 0; s < d; ++s) out(s, s) = 0.0;
    return out;
}

double ucentered_inner(const Matrix& a, const Matrix& b) {
    const int d = a.rows();
    if (!a.same_shape(b)) throw Error(ErrorCode::DimensionMismatch, "inner product of different shapes");
    if (d < 4) throw Error(ErrorCode::DimensionTooSmall, "ucentered_inner needs dimension >= 4, got " + std::to_string(d));

    double sum = 0.0;
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t)
            if (s != t) sum += a(s, t) * b(s, t);
    return sum / (static_cast<double>(d) * (d - 3));
}

double dcov_u(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "dcov_u inputs differ in length");
    if (x.size() < 4) throw Error(ErrorCode::DimensionTooSmall, "dcov_u needs n >= 4");
    return ucentered_inner(u_center(pairwise_distance(x)), u_center(pairwise_distance(y)));
}

namespace {

// Sum of u-centered distance matrices of the columns of one distance-tensor slice.
Matrix summed_ucentered_columns(const Matrix& slice) {
    const int n = slice.rows();
    Matrix acc(n, n);
    for (int alpha = 0; alpha < n; ++alpha) {
        const Matrix c = u_center(pairwise_distance(slice.column(alpha)));
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) acc(s, t) += c(s, t);
    }
    return acc;
}

}  // namespace

double mdcov(const Matrix& samples, int p, int q) {
    check_sample_matrix(samples);
    if (p < 0 || p >= samples.cols() || q < 0 || q >= samples.cols())
        throw Error(ErrorCode::IndexOutOfRange, "feature index out of range");
    const Matrix a = summed_ucentered_columns(pairwise_distance(samples.column(p)));
    const Matrix b = summed_ucentered_columns(pairwise_distance(samples.column(q)));
    return ucentered_inner(a, b);
}

double mdcor(const Matrix& samples, int p, int q) {
    const double vpp = mdcov(samples, p, p);
    const double vqq = mdcov(samples, q, q);
    if (vpp <= 0.0 || vqq <= 0.0)
        throw Error(ErrorCode::DegenerateFeature, "self-mdcov not positive");
    return mdcov(samples, p, q) / std::sqrt(vpp * vqq);
}

}  // namespace ckc
