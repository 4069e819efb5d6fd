#pragma once

#include <span>
#include <vector>

#include "ckc/matrix.hpp"

namespace ckc {

/// Pairwise absolute-difference matrix of a scalar sample vector.
Matrix pairwise_distance(std::span<const double> x);

/// Stack of per-feature pairwise distance matrices, one n-by-n slice per column of S.
std::vector<Matrix> distance_tensor(const Matrix& samples);

/// Four-term u-centering of a symmetric matrix; the diagonal of the result
/// is forced to zero and excluded from inner products downstream.
/// Requires d >= 3.
Matrix u_center(const Matrix& m);

/// Unbiased inner product of two u-centered matrices:
/// sum of off-diagonal entrywise products divided by d(d-3). Requires d >= 4.
double ucentered_inner(const Matrix& a, const Matrix& b);

/// Unbiased squared distance covariance of two scalar samples of length n >= 4.
double dcov_u(std::span<const double> x, std::span<const double> y);

/// Marginal distance covariance between features p and q of S: the double
/// sum of dCov^2 over all column pairs of the two per-feature distance
/// matrices, computed via bilinearity as a single inner product of summed
/// u-centered column-distance matrices.
double mdcov(const Matrix& samples, int p, int q);

/// Marginal distance correlation; requires both self-mdcov values positive.
double mdcor(const Matrix& samples, int p, int q);

void check_sample_matrix(const Matrix& samples);

}  // namespace ckc
