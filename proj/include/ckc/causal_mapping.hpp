#pragma once

#include <vector>

#include "ckc/matrix.hpp"

namespace ckc {

enum class Dependence { Independent, Dependent };

/// Inverse standard-normal CDF, |relative error| well below 1e-9.
double normal_quantile(double p);

/// Quantile of the chi-square distribution with one degree of freedom.
double chi_square_quantile_1df(double prob);

/// Threshold matrix: off-diagonal n * chi^2_{1-nu}(1), zero diagonal.
Matrix gamma_matrix(double nu, int n, int m);

/// U-centered normalized distance tensor: per feature, u_center(H_j) divided
/// by the mean of H_j (diagonal included in the mean). Throws
/// DegenerateFeature when a feature is constant.
std::vector<Matrix> z_tensor(const Matrix& samples);

/// Sample mapping function for sample i, factorized form:
/// sum_zeta W_zeta W_zeta^T - Gamma(nu) with W_zeta = sum_gamma |Z[zeta,gamma,.] - Z[i,gamma,.]|.
Matrix phi(const Matrix& samples, int i, double nu);

/// Literal triple-sum form of the mapping function; O(n^3 m^2), test oracle for phi.
Matrix phi_naive(const Matrix& samples, int i, double nu);

/// Sum of phi over all samples.
Matrix aggregate_phi(const Matrix& samples, double nu);

/// Dependence verdict for features p and q: Dependent iff the aggregate
/// mapping entry is strictly positive; ties at zero resolve to Independent.
Dependence dependence_decision(const Matrix& samples, int p, int q, double nu);

namespace detail {
/// phi given a precomputed Z tensor and threshold matrix (shared across samples).
Matrix phi_from_z(const std::vector<Matrix>& z, int i, const Matrix& gamma);
}  // namespace detail

}  // namespace ckc
