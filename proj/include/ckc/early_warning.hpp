#pragma once

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "ckc/matrix.hpp"

namespace ckc {

struct NodeSeriesSet {
    std::vector<std::vector<double>> series;  // one per node, equal lengths
};

struct WarnConfig {
    int window_w = 60;
    int embed_dim = 4;
    int max_lag = 100;
    int lag_stride = 10;
    int t_stride = 30;  // spacing of TC evaluation time points
    double nu = 0.05;
    double tau = 1.0;
};

struct WarnResult {
    std::vector<int> years;      // distinct years, ascending
    std::vector<double> yc_z;    // standardized yearly totals
    std::set<int> warned_years;  // year values flagged by the warning rule (may include last+1)
};

/// Delay embedding of the window of `window_w` points ending at index
/// t_end (exclusive): rows are the consecutive length-embed_dim
/// subwindows, so the result has window_w - embed_dim + 1 rows.
Matrix window_embed(std::span<const double> series, int t_end, int window_w, int embed_dim);

/// Mapping matrix of one univariate window: mean of the per-row mapping
/// matrices of the delay-embedded window.
Matrix window_mapping(std::span<const double> series, int t_end, const WarnConfig& config);

/// Forward/backward lagged kernel values (kappa(theta), kappa(-theta))
/// between two node series at time t (window end, exclusive).
std::pair<double, double> lagged_kappa(std::span<const double> i_series,
                                       std::span<const double> j_series, int t, int theta,
                                       const WarnConfig& config);

/// Total causal coupling TC(t): sum of kappa(theta) + kappa(-theta) over
/// all west-east node pairs and the lag grid {0, stride, ..., <= max_lag}.
double total_causal(const NodeSeriesSet& west, const NodeSeriesSet& east, int t,
                    const WarnConfig& config);

/// Per-year sums of a TC series, z-standardized over years.
std::vector<double> yearly_causal(std::span<const double> tc, std::span<const int> year_of_t,
                                  std::vector<int>* years_out = nullptr);

/// Warning rule: year index y triggers a warning for y+1 when the sign of
/// YC_z flips from y-1 to y, |YC_z(y)| is a local extremum, and
/// |YC_z(y)| >= tau. Returns the warned indices (y+1, may equal size()).
std::set<int> extract_warnings(std::span<const double> yc_z, double tau);

/// Full pipeline over a daily series set: TC on a time grid, yearly
/// aggregation, warning extraction. Window mappings are cached per
/// (node, window end).
WarnResult warning_pipeline(const NodeSeriesSet& west, const NodeSeriesSet& east,
                            std::span<const int> year_of_t, const WarnConfig& config);

}  // namespace ckc
