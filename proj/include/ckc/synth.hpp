#pragma once

#include <cstdint>
#include <vector>

#include "ckc/graph_space.hpp"
#include "ckc/matrix.hpp"
#include "ckc/rng.hpp"

namespace ckc {

enum class MuMode { Zero, PerSample, PerFeature };

struct GenConfig {
    int n = 100;
    int m = 10;
    double edge_prob = 0.4;
    MuMode mu_mode = MuMode::PerSample;
    bool nonlinear = false;
    double noise_scale = 0.0;
    uint64_t seed = 0;
};

struct LabeledSamples {
    Matrix samples;
    std::vector<int> labels;
};

/// Random DAG: uniform random topological order, each forward pair an edge
/// with probability edge_prob, weights uniform in [0.5, 2] with random sign.
CausalGraph random_dag(int m, double edge_prob, Rng& rng);

/// Chain DAG X1 -> X2 -> ... -> Xm with |weights| drawn uniform in [w_lo, w_hi].
CausalGraph chain_dag(int m, double w_lo, double w_hi, Rng& rng);

/// Base matrix SD = sigma * F + mu: F standard normal, sigma a single
/// uniform(0.5, 2) draw, mu per mu_mode (per-sample vector broadcast across
/// features by default).
Matrix gen_base(const GenConfig& config, Rng& rng);

/// Structural-equation pass over a copy of SD in topological order.
/// Linear: child += w * parent. Nonlinear: child += w * tanh(parent) plus
/// Gaussian noise of scale noise_scale.
Matrix apply_sem(const Matrix& base, const CausalGraph& g, bool nonlinear, double noise_scale,
                 Rng& rng);

/// k independent random-DAG groups of n samples each, concatenated, with
/// group labels.
LabeledSamples benchmark_groups(int k_groups, const GenConfig& config);

/// Two-group benchmark: chain DAG with |w| in [w_lo, w_hi] vs empty DAG.
LabeledSamples chain_vs_empty(int n_per_group, int m, double w_lo, double w_hi, bool nonlinear,
                              double noise_scale, MuMode mu_mode, uint64_t seed);

}  // namespace ckc
