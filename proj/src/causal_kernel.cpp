#include "ckc/causal_kernel.hpp"

#include <cmath>
#include <string>

#include "ckc/causal_mapping.hpp"

namespace ckc {

namespace {

double frobenius_inner(const Matrix& a, const Matrix& b) {
    double s = 0.0;
    const double* pa = a.data();
    const double* pb = b.data();
    const size_t len = a.storage().size();
    for (size_t k = 0; k < len; ++k) s += pa[k] * pb[k];
    return s;
}

}  // namespace

double kappa(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw Error(ErrorCode::FeatureCountMismatch, "mapping matrices differ in shape");
    const double na = std::sqrt(frobenius_inner(a, a));
    const double nb = std::sqrt(frobenius_inner(b, b));
    if (na == 0.0 || nb == 0.0) throw Error(ErrorCode::ZeroNorm, "mapping matrix has zero Frobenius norm");
    return frobenius_inner(a, b) / (na * nb);
}

std::vector<Matrix> mapping_matrices(const Matrix& samples, double nu) {
    const auto z = z_tensor(samples);
    const Matrix gamma = gamma_matrix(nu, samples.rows(), samples.cols());
    std::vector<Matrix> phis;
    phis.reserve(samples.rows());
    for (int i = 0; i < samples.rows(); ++i) phis.push_back(detail::phi_from_z(z, i, gamma));
    return phis;
}

Matrix kernel_matrix(const Matrix& samples, double nu) {
    const auto phis = mapping_matrices(samples, nu);
    const int n = samples.rows();

    std::vector<double> norms(n);
    for (int i = 0; i < n; ++i) {
        norms[i] = std::sqrt(frobenius_inner(phis[i], phis[i]));
        if (norms[i] == 0.0)
            throw Error(ErrorCode::ZeroNorm, "zero-norm mapping matrix for sample " + std::to_string(i));
    }

    Matrix k(n, n);
    for (int i = 0; i < n; ++i) {
        k(i, i) = 1.0;
        for (int j = 0; j < i; ++j) {
            const double v = frobenius_inner(phis[i], phis[j]) / (norms[i] * norms[j]);
            k(i, j) = v;
            k(j, i) = v;
        }
    }
    return k;
}

bool heterogeneity_decision(const Matrix& samples_a, const Matrix& samples_b, double nu) {
    if (samples_a.cols() != samples_b.cols())
        throw Error(ErrorCode::FeatureCountMismatch, "sample sets differ in feature count");
    const auto phis_a = mapping_matrices(samples_a, nu);
    const auto phis_b = mapping_matrices(samples_b, nu);
    double total = 0.0;
    for (const auto& pa : phis_a)
        for (const auto& pb : phis_b) total += kappa(pa, pb);
    return total < 0.0;
}

}  // namespace ckc
