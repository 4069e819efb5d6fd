#include "ckc/causal_mapping.hpp"

#include <cmath>
#include <string>

#include "ckc/distance_stats.hpp"

namespace ckc {

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::OutOfDomain, "normal_quantile needs p in (0,1)");

    // Acklam's rational approximation, then one Halley refinement step
    // against erfc to push the relative error to machine precision.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;

    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // Halley step: e = Phi(x) - p, with Phi via erfc for tail accuracy.
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    x = x - u / (1.0 + x * u / 2.0);
    return x;
}

double chi_square_quantile_1df(double prob) {
    if (!(prob > 0.0 && prob < 1.0)) throw Error(ErrorCode::OutOfDomain, "chi-square prob must lie in (0,1)");
    const double z = normal_quantile((1.0 + prob) / 2.0);
    return z * z;
}

Matrix gamma_matrix(double nu, int n, int m) {
    if (!(nu > 0.0 && nu < 1.0)) throw Error(ErrorCode::OutOfDomain, "nu must lie in (0,1)");
    if (n < 4) throw Error(ErrorCode::OutOfDomain, "gamma_matrix needs n >= 4");
    if (m < 2) throw Error(ErrorCode::OutOfDomain, "gamma_matrix needs m >= 2");
    const double off = n * chi_square_quantile_1df(1.0 - nu);
    Matrix g(m, m, off);
    for (int j = 0; j < m; ++j) g(j, j) = 0.0;
    return g;
}

std::vector<Matrix> z_tensor(const Matrix& samples) {
    check_sample_matrix(samples);
    const int n = samples.rows();
    std::vector<Matrix> z;
    z.reserve(samples.cols());
    for (int j = 0; j < samples.cols(); ++j) {
        Matrix h = pairwise_distance(samples.column(j));
        double mean = 0.0;
        for (double v : h.storage()) mean += v;
        mean /= static_cast<double>(n) * n;
        if (mean == 0.0)
            throw Error(ErrorCode::DegenerateFeature, "feature " + std::to_string(j) + " is constant");
        Matrix c = u_center(h);
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) c(s, t) /= mean;
        z.push_back(std::move(c));
    }
    return z;
}

namespace detail {

Matrix phi_from_z(const std::vector<Matrix>& z, int i, const Matrix& gamma) {
    const int m = static_cast<int>(z.size());
    const int n = z[0].rows();

    Matrix out(m, m);
    std::vector<double> w(m);
    for (int zeta = 0; zeta < n; ++zeta) {
        for (int j = 0; j < m; ++j) {
            double s = 0.0;
            const Matrix& zj = z[j];
            for (int gam = 0; gam < n; ++gam) s += std::fabs(zj(zeta, gam) - zj(i, gam));
            w[j] = s;
        }
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) out(p, q) += w[p] * w[q];
    }
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) out(p, q) -= gamma(p, q);
    return out;
}

}  // namespace detail

Matrix phi(const Matrix& samples, int i, double nu) {
    if (i < 0 || i >= samples.rows()) throw Error(ErrorCode::IndexOutOfRange, "sample index out of range");
    const auto z = z_tensor(samples);
    const Matrix gamma = gamma_matrix(nu, samples.rows(), samples.cols());
    return detail::phi_from_z(z, i, gamma);
}

Matrix phi_naive(const Matrix& samples, int i, double nu) {
    if (i < 0 || i >= samples.rows()) throw Error(ErrorCode::IndexOutOfRange, "sample index out of range");
    const auto z = z_tensor(samples);
    const int n = samples.rows();
    const int m = samples.cols();
    const Matrix gamma = gamma_matrix(nu, n, m);

    auto v_vec = [&](int zeta, int gam) {
        std::vector<double> v(m);
        for (int j = 0; j < m; ++j) v[j] = std::fabs(z[j](zeta, gam) - z[j](i, gam));
        return v;
    };

    Matrix out(m, m);
    for (int alpha = 0; alpha < n; ++alpha) {
        for (int beta = 0; beta < n; ++beta) {
            for (int zeta = 0; zeta < n; ++zeta) {
                const auto va = v_vec(zeta, alpha);
                const auto vb = v_vec(zeta, beta);
                for (int p = 0; p < m; ++p)
                    for (int q = 0; q < m; ++q) out(p, q) += va[p] * vb[q];
            }
        }
    }
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) out(p, q) -= gamma(p, q);
    return out;
}

Matrix aggregate_phi(const Matrix& samples, double nu) {
    const auto z = z_tensor(samples);
    const int n = samples.rows();
    const int m = samples.cols();
    const Matrix gamma = gamma_matrix(nu, n, m);

    Matrix acc(m, m);
    for (int i = 0; i < n; ++i) {
        const Matrix p = detail::phi_from_z(z, i, gamma);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) acc(a, b) += p(a, b);
    }
    return acc;
}

Dependence dependence_decision(const Matrix& samples, int p, int q, double nu) {
    if (p == q) throw Error(ErrorCode::IndexOutOfRange, "dependence_decision needs p != q");
    if (p < 0 || p >= samples.cols() || q < 0 || q >= samples.cols())
        throw Error(ErrorCode::IndexOutOfRange, "feature index out of range");
    const Matrix agg = aggregate_phi(samples, nu);
    return agg(p, q) > 0.0 ? Dependence::Dependent : Dependence::Independent;
}

}  // namespace ckc
