#include "ckc/synth.hpp"

#include <cmath>

namespace ckc {

CausalGraph random_dag(int m, double edge_prob, Rng& rng) {
    if (m < 2) throw Error(ErrorCode::OutOfDomain, "random_dag needs m >= 2");

    // Fisher-Yates for a uniform random topological order
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    for (int i = m - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.uniform_int(static_cast<uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }

    CausalGraph g;
    g.node_count = m;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (rng.uniform() < edge_prob) {
                const double w = rng.uniform(0.5, 2.0) * rng.random_sign();
                g.edges.push_back({order[a], order[b], w});
            }
        }
    }
    return g;
}

CausalGraph chain_dag(int m, double w_lo, double w_hi, Rng& rng) {
    CausalGraph g;
    g.node_count = m;
    for (int j = 1; j < m; ++j) {
        const double w = rng.uniform(w_lo, w_hi) * rng.random_sign();
        g.edges.push_back({j - 1, j, w});
    }
    return g;
}

Matrix gen_base(const GenConfig& config, Rng& rng) {
    const int n = config.n;
    const int m = config.m;
    if (n < 4 || m < 2) throw Error(ErrorCode::OutOfDomain, "gen_base needs n >= 4 and m >= 2");

    const double sigma = rng.uniform(0.5, 2.0);
    Matrix sd(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) sd(i, j) = sigma * rng.normal();

    if (config.mu_mode == MuMode::PerSample) {
        for (int i = 0; i < n; ++i) {
            const double mu = rng.uniform(-4.0, 4.0);
            for (int j = 0; j < m; ++j) sd(i, j) += mu;
        }
    } else if (config.mu_mode == MuMode::PerFeature) {
        for (int j = 0; j < m; ++j) {
            const double mu = rng.uniform(-4.0, 4.0);
            for (int i = 0; i < n; ++i) sd(i, j) += mu;
        }
    }
    return sd;
}

Matrix apply_sem(const Matrix& base, const CausalGraph& g, bool nonlinear, double noise_scale,
                 Rng& rng) {
    if (g.node_count != base.cols())
        throw Error(ErrorCode::ShapeMismatch, "graph node count must equal feature count");
    const auto order = topological_order(g);  // throws CyclicGraph

    std::vector<std::vector<CausalGraph::Edge>> parents(g.node_count);
    for (const auto& e : g.edges) parents[e.child].push_back(e);

    Matrix out = base;
    const int n = base.rows();
    for (int node : order) {
        if (parents[node].empty()) continue;
        for (const auto& e : parents[node]) {
            for (int i = 0; i < n; ++i) {
                const double parent_val = out(i, e.parent);
                out(i, node) += e.weight * (nonlinear ? std::tanh(parent_val) : parent_val);
            }
        }
        if (nonlinear && noise_scale > 0.0)
            for (int i = 0; i < n; ++i) out(i, node) += noise_scale * rng.normal();
    }
    return out;
}

LabeledSamples benchmark_groups(int k_groups, const GenConfig& config) {
    if (k_groups < 2) throw Error(ErrorCode::OutOfDomain, "benchmark_groups needs k >= 2");

    Rng rng(config.seed);
    Matrix all(config.n * k_groups, config.m);
    std::vector<int> labels(static_cast<size_t>(config.n) * k_groups);
    for (int grp = 0; grp < k_groups; ++grp) {
        const CausalGraph g = random_dag(config.m, config.edge_prob, rng);
        const Matrix data = apply_sem(gen_base(config, rng), g, config.nonlinear, config.noise_scale, rng);
        for (int i = 0; i < config.n; ++i) {
            labels[static_cast<size_t>(grp) * config.n + i] = grp;
            for (int j = 0; j < config.m; ++j) all(grp * config.n + i, j) = data(i, j);
        }
    }
    return {std::move(all), std::move(labels)};
}

LabeledSamples chain_vs_empty(int n_per_group, int m, double w_lo, double w_hi, bool nonlinear,
                              double noise_scale, MuMode mu_mode, uint64_t seed) {
    Rng rng(seed);
    GenConfig cfg;
    cfg.n = n_per_group;
    cfg.m = m;
    cfg.mu_mode = mu_mode;

    const CausalGraph chain = chain_dag(m, w_lo, w_hi, rng);
    const Matrix group_a = apply_sem(gen_base(cfg, rng), chain, nonlinear, noise_scale, rng);
    const Matrix group_b = gen_base(cfg, rng);  // empty DAG: base stays untouched

    Matrix all(2 * n_per_group, m);
    std::vector<int> labels(static_cast<size_t>(2) * n_per_group);
    for (int i = 0; i < n_per_group; ++i) {
        for (int j = 0; j < m; ++j) {
            all(i, j) = group_a(i, j);
            all(n_per_group + i, j) = group_b(i, j);
        }
        labels[i] = 0;
        labels[n_per_group + i] = 1;
    }
    return {std::move(all), std::move(labels)};
}

}  // namespace ckc
