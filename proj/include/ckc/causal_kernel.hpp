#pragma once

#include <vector>

#include "ckc/matrix.hpp"

namespace ckc {

/// Cosine similarity of two mapping matrices under the Frobenius inner product.
double kappa(const Matrix& a, const Matrix& b);

/// All per-sample mapping matrices of S, computed once for reuse.
std::vector<Matrix> mapping_matrices(const Matrix& samples, double nu);

/// n-by-n Gram matrix K[i,i'] = kappa(phi(S,i), phi(S,i')).
Matrix kernel_matrix(const Matrix& samples, double nu);

/// Set-level heterogeneity verdict: true iff the summed cross-set kernel
/// values are strictly negative.
bool heterogeneity_decision(const Matrix& samples_a, const Matrix& samples_b, double nu);

}  // namespace ckc
