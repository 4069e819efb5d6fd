#include "ckc/early_warning.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "ckc/causal_kernel.hpp"
#include "ckc/causal_mapping.hpp"

namespace ckc {

namespace {

void check_config(const WarnConfig& c) {
    if (c.embed_dim < 2) throw Error(ErrorCode::OutOfDomain, "embed_dim must be >= 2");
    if (c.window_w < c.embed_dim + 3)
        throw Error(ErrorCode::TooFewEmbeddedSamples, "window_w must be >= embed_dim + 3");
    if (c.max_lag < 0) throw Error(ErrorCode::OutOfDomain, "max_lag must be >= 0");
    if (c.lag_stride < 1 || c.t_stride < 1) throw Error(ErrorCode::OutOfDomain, "strides must be >= 1");
}

}  // namespace

Matrix window_embed(std::span<const double> series, int t_end, int window_w, int embed_dim) {
    const int rows = window_w - embed_dim + 1;
    if (rows < 4) throw Error(ErrorCode::TooFewEmbeddedSamples, "window yields fewer than 4 embedded rows");
    if (t_end < window_w || t_end > static_cast<int>(series.size()))
        throw Error(ErrorCode::WindowOutOfRange,
                    "window [" + std::to_string(t_end - window_w) + ", " + std::to_string(t_end) + ") out of range");

    const int start = t_end - window_w;
    Matrix out(rows, embed_dim);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < embed_dim; ++c) out(r, c) = series[start + r + c];
    return out;
}

Matrix window_mapping(std::span<const double> series, int t_end, const WarnConfig& config) {
    check_config(config);
    const Matrix embedded = window_embed(series, t_end, config.window_w, config.embed_dim);
    Matrix agg = aggregate_phi(embedded, config.nu);
    const double inv = 1.0 / embedded.rows();
    for (int p = 0; p < agg.rows(); ++p)
        for (int q = 0; q < agg.cols(); ++q) agg(p, q) *= inv;
    return agg;
}

std::pair<double, double> lagged_kappa(std::span<const double> i_series,
                                       std::span<const double> j_series, int t, int theta,
                                       const WarnConfig& config) {
    if (theta < 0) throw Error(ErrorCode::OutOfDomain, "theta must be >= 0");
    const Matrix i_lagged = window_mapping(i_series, t - theta, config);
    const Matrix i_now = theta == 0 ? i_lagged : window_mapping(i_series, t, config);
    const Matrix j_lagged = theta == 0 ? Matrix() : window_mapping(j_series, t - theta, config);
    const Matrix j_now = window_mapping(j_series, t, config);

    const double forward = kappa(i_lagged, j_now);
    const double backward = theta == 0 ? kappa(i_now, j_now) : kappa(i_now, j_lagged);
    return {forward, backward};
}

double total_causal(const NodeSeriesSet& west, const NodeSeriesSet& east, int t,
                    const WarnConfig& config) {
    if (west.series.empty() || east.series.empty())
        throw Error(ErrorCode::EmptyInput, "both node groups must be non-empty");
    double total = 0.0;
    for (const auto& wi : west.series) {
        for (const auto& ej : east.series) {
            for (int theta = 0; theta <= config.max_lag; theta += config.lag_stride) {
                const auto [fwd, bwd] = lagged_kappa(wi, ej, t, theta, config);
                total += fwd + bwd;
            }
        }
    }
    return total;
}

std::vector<double> yearly_causal(std::span<const double> tc, std::span<const int> year_of_t,
                                  std::vector<int>* years_out) {
    if (tc.size() != year_of_t.size()) throw Error(ErrorCode::LengthMismatch, "tc and year index differ in length");
    std::map<int, double> by_year;
    for (size_t i = 0; i < tc.size(); ++i) by_year[year_of_t[i]] += tc[i];
    if (by_year.size() < 2) throw Error(ErrorCode::TooFewYears, "need at least 2 distinct years");

    std::vector<double> yc;
    yc.reserve(by_year.size());
    if (years_out) years_out->clear();
    for (const auto& [year, total] : by_year) {
        yc.push_back(total);
        if (years_out) years_out->push_back(year);
    }

    double mean = 0.0;
    for (double v : yc) mean += v;
    mean /= static_cast<double>(yc.size());
    double var = 0.0;
    for (double v : yc) var += (v - mean) * (v - mean);
    var /= static_cast<double>(yc.size());
    if (var == 0.0) throw Error(ErrorCode::ZeroVariance, "yearly totals are constant");
    const double sd = std::sqrt(var);
    for (double& v : yc) v = (v - mean) / sd;
    return yc;
}

std::set<int> extract_warnings(std::span<const double> yc_z, double tau) {
    const int n = static_cast<int>(yc_z.size());
    if (n < 3) throw Error(ErrorCode::TooFewYears, "need at least 3 years");

    std::set<int> warned;
    for (int y = 1; y < n; ++y) {
        const bool sign_flip = (yc_z[y] >= 0.0) != (yc_z[y - 1] >= 0.0);
        if (!sign_flip) continue;
        const double mag = std::fabs(yc_z[y]);
        if (mag < tau) continue;
        const bool extremum =
            mag >= std::fabs(yc_z[y - 1]) && (y + 1 >= n || mag >= std::fabs(yc_z[y + 1]));
        if (extremum) warned.insert(y + 1);
    }
    return warned;
}

WarnResult warning_pipeline(const NodeSeriesSet& west, const NodeSeriesSet& east,
                            std::span<const int> year_of_t, const WarnConfig& config) {
    check_config(config);
    if (west.series.empty() || east.series.empty())
        throw Error(ErrorCode::EmptyInput, "both node groups must be non-empty");
    const int len = static_cast<int>(year_of_t.size());
    for (const auto& s : west.series)
        if (static_cast<int>(s.size()) != len) throw Error(ErrorCode::LengthMismatch, "series length mismatch");
    for (const auto& s : east.series)
        if (static_cast<int>(s.size()) != len) throw Error(ErrorCode::LengthMismatch, "series length mismatch");

    // cache window mappings per (group, node, window end)
    std::map<std::pair<int, int>, Matrix> cache;
    auto mapping_of = [&](int group, int node, int t_end) -> const Matrix& {
        const auto key = std::make_pair(group * 100000 + node, t_end);
        auto it = cache.find(key);
        if (it == cache.end()) {
            const auto& s = group == 0 ? west.series[node] : east.series[node];
            it = cache.emplace(key, window_mapping(s, t_end, config)).first;
        }
        return it->second;
    };

    const int t_min = config.window_w + config.max_lag;
    if (t_min > len) throw Error(ErrorCode::WindowOutOfRange, "series too short for window plus max lag");

    std::vector<double> tc;
    std::vector<int> tc_year;
    for (int t = t_min; t <= len; t += config.t_stride) {
        double total = 0.0;
        for (size_t wi = 0; wi < west.series.size(); ++wi) {
            for (size_t ej = 0; ej < east.series.size(); ++ej) {
                for (int theta = 0; theta <= config.max_lag; theta += config.lag_stride) {
                    const Matrix& i_lag = mapping_of(0, static_cast<int>(wi), t - theta);
                    const Matrix& i_now = mapping_of(0, static_cast<int>(wi), t);
                    const Matrix& j_lag = mapping_of(1, static_cast<int>(ej), t - theta);
                    const Matrix& j_now = mapping_of(1, static_cast<int>(ej), t);
                    total += kappa(i_lag, j_now) + kappa(i_now, j_lag);
                }
            }
        }
        tc.push_back(total);
        tc_year.push_back(year_of_t[t - 1]);
    }

    WarnResult result;
    result.yc_z = yearly_causal(tc, tc_year, &result.years);
    const auto warned_idx = extract_warnings(result.yc_z, config.tau);
    for (int idx : warned_idx) {
        if (idx < static_cast<int>(result.years.size()))
            result.warned_years.insert(result.years[idx]);
        else
            result.warned_years.insert(result.years.back() + 1);
    }
    return result;
}

}  // namespace ckc
