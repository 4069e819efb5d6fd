#include "ckc.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "ckc/causal_kernel.hpp"
#include "ckc/causal_mapping.hpp"
#include "ckc/clustering.hpp"
#include "ckc/csv_io.hpp"
#include "ckc/distance_stats.hpp"
#include "ckc/early_warning.hpp"
#include "ckc/eval_metrics.hpp"
#include "ckc/graph_space.hpp"
#include "ckc/stability.hpp"
#include "ckc/synth.hpp"

struct ckc_matrix {
    ckc::Matrix m;
};

struct ckc_graph {
    ckc::CausalGraph g;
};

namespace {

thread_local std::string g_last_error;

ckc_status status_of(ckc::ErrorCode code) {
    return static_cast<ckc_status>(static_cast<int>(code) + 1);
}

ckc_status fail(ckc_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
ckc_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return CKC_OK;
    } catch (const ckc::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::exception& e) {
        return fail(CKC_ERR_UNKNOWN, e.what());
    } catch (...) {
        return fail(CKC_ERR_UNKNOWN, "unknown error");
    }
}

bool all_nonnull() { return true; }

template <typename T, typename... Rest>
bool all_nonnull(T* p, Rest... rest) {
    return p != nullptr && all_nonnull(rest...);
}

template <typename... Ptrs>
ckc_status require(Ptrs... ptrs) {
    if (!all_nonnull(ptrs...)) return fail(CKC_ERR_INVALID_ARGUMENT, "null pointer argument");
    return CKC_OK;
}

ckc_matrix* wrap(ckc::Matrix m) { return new ckc_matrix{std::move(m)}; }

int* copy_ints(const std::vector<int>& v) {
    int* out = static_cast<int*>(std::malloc(sizeof(int) * std::max<size_t>(v.size(), 1)));
    std::memcpy(out, v.data(), sizeof(int) * v.size());
    return out;
}

double* copy_doubles(const std::vector<double>& v) {
    double* out = static_cast<double*>(std::malloc(sizeof(double) * std::max<size_t>(v.size(), 1)));
    std::memcpy(out, v.data(), sizeof(double) * v.size());
    return out;
}

ckc::WarnConfig to_cpp(const ckc_warn_config& c) {
    ckc::WarnConfig out;
    out.window_w = c.window_w;
    out.embed_dim = c.embed_dim;
    out.max_lag = c.max_lag;
    out.lag_stride = c.lag_stride;
    out.t_stride = c.t_stride;
    out.nu = c.nu;
    out.tau = c.tau;
    return out;
}

ckc::MuMode mu_mode_of(int mode) {
    switch (mode) {
        case 0: return ckc::MuMode::Zero;
        case 1: return ckc::MuMode::PerSample;
        case 2: return ckc::MuMode::PerFeature;
        default: throw ckc::Error(ckc::ErrorCode::OutOfDomain, "mu_mode must be 0, 1, or 2");
    }
}

void export_labels(const ckc::ClusterAssignment& a, int** labels, int* count, double* inertia,
                   int* iterations) {
    *labels = copy_ints(a.labels);
    *count = static_cast<int>(a.labels.size());
    if (inertia) *inertia = a.inertia;
    if (iterations) *iterations = a.iterations;
}

void export_warn(const ckc::WarnResult& r, int** years, double** yc_z, int* n_years,
                 int** warned_years, int* n_warned) {
    *years = copy_ints(r.years);
    *yc_z = copy_doubles(r.yc_z);
    *n_years = static_cast<int>(r.years.size());
    std::vector<int> warned(r.warned_years.begin(), r.warned_years.end());
    *warned_years = copy_ints(warned);
    *n_warned = static_cast<int>(warned.size());
}

}  // namespace

extern "C" {

const char* ckc_status_name(ckc_status status) {
    switch (status) {
        case CKC_OK: return "Ok";
        case CKC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case CKC_ERR_UNKNOWN: return "Unknown";
        default: break;
    }
    const int code = static_cast<int>(status) - 1;
    if (code >= 0 && code <= static_cast<int>(ckc::ErrorCode::IoError))
        return ckc::error_code_name(static_cast<ckc::ErrorCode>(code));
    return "Unknown";
}

const char* ckc_last_error(void) { return g_last_error.c_str(); }

ckc_status ckc_matrix_create(int rows, int cols, const double* data, ckc_matrix** out) {
    if (auto s = require(data, out)) return s;
    return guarded([&] {
        if (rows < 1 || cols < 1)
            throw ckc::Error(ckc::ErrorCode::ShapeMismatch, "rows and cols must be positive");
        ckc::Matrix m(rows, cols);
        std::memcpy(m.data(), data, sizeof(double) * static_cast<size_t>(rows) * cols);
        *out = wrap(std::move(m));
    });
}

int ckc_matrix_rows(const ckc_matrix* m) { return m ? m->m.rows() : 0; }
int ckc_matrix_cols(const ckc_matrix* m) { return m ? m->m.cols() : 0; }
const double* ckc_matrix_data(const ckc_matrix* m) { return m ? m->m.data() : nullptr; }
void ckc_matrix_free(ckc_matrix* m) { delete m; }

ckc_status ckc_graph_create(int node_count, const int* parents, const int* children,
                            const double* weights, int n_edges, ckc_graph** out) {
    if (auto s = require(out)) return s;
    if (n_edges > 0) {
        if (auto s = require(parents, children, weights)) return s;
    }
    return guarded([&] {
        if (node_count < 1)
            throw ckc::Error(ckc::ErrorCode::EmptyInput, "node_count must be positive");
        ckc::CausalGraph g;
        g.node_count = node_count;
        for (int e = 0; e < n_edges; ++e) {
            if (parents[e] < 0 || parents[e] >= node_count || children[e] < 0 ||
                children[e] >= node_count)
                throw ckc::Error(ckc::ErrorCode::IndexOutOfRange, "edge node index out of range");
            g.edges.push_back({parents[e], children[e], weights[e]});
        }
        *out = new ckc_graph{std::move(g)};
    });
}

int ckc_graph_node_count(const ckc_graph* g) { return g ? g->g.node_count : 0; }
int ckc_graph_edge_count(const ckc_graph* g) { return g ? static_cast<int>(g->g.edges.size()) : 0; }

ckc_status ckc_graph_edge(const ckc_graph* g, int index, int* parent, int* child, double* weight) {
    if (auto s = require(g, parent, child, weight)) return s;
    return guarded([&] {
        if (index < 0 || index >= static_cast<int>(g->g.edges.size()))
            throw ckc::Error(ckc::ErrorCode::IndexOutOfRange, "edge index out of range");
        const auto& e = g->g.edges[index];
        *parent = e.parent;
        *child = e.child;
        *weight = e.weight;
    });
}

void ckc_graph_free(ckc_graph* g) { delete g; }

void ckc_ints_free(int* p) { std::free(p); }
void ckc_doubles_free(double* p) { std::free(p); }
void ckc_strings_free(char** p, int count) {
    if (!p) return;
    for (int i = 0; i < count; ++i) std::free(p[i]);
    std::free(p);
}

/* ------------------------------ CSV ------------------------------ */

ckc_status ckc_samples_load_csv(const char* path, ckc_matrix** out) {
    if (auto s = require(path, out)) return s;
    return guarded([&] { *out = wrap(ckc::load_samples_csv(path)); });
}

ckc_status ckc_samples_write_csv(const char* path, const ckc_matrix* samples) {
    if (auto s = require(path, samples)) return s;
    return guarded([&] { ckc::write_samples_csv(path, samples->m); });
}

ckc_status ckc_table_load_csv(const char* path, ckc_matrix** values, char*** header,
                              int* n_columns) {
    if (auto s = require(path, values, header, n_columns)) return s;
    return guarded([&] {
        ckc::Table t = ckc::load_table_csv(path);
        char** names = static_cast<char**>(std::malloc(sizeof(char*) * t.header.size()));
        for (size_t i = 0; i < t.header.size(); ++i) {
            names[i] = static_cast<char*>(std::malloc(t.header[i].size() + 1));
            std::memcpy(names[i], t.header[i].c_str(), t.header[i].size() + 1);
        }
        *n_columns = static_cast<int>(t.header.size());
        *header = names;
        *values = wrap(std::move(t.values));
    });
}

ckc_status ckc_matrix_load_csv(const char* path, ckc_matrix** out) {
    if (auto s = require(path, out)) return s;
    return guarded([&] { *out = wrap(ckc::load_matrix_csv(path)); });
}

ckc_status ckc_matrix_write_csv(const char* path, const ckc_matrix* m) {
    if (auto s = require(path, m)) return s;
    return guarded([&] { ckc::write_matrix_csv(path, m->m); });
}

ckc_status ckc_labels_load_csv(const char* path, int** labels, int* count) {
    if (auto s = require(path, labels, count)) return s;
    return guarded([&] {
        const auto v = ckc::load_labels_csv(path);
        *labels = copy_ints(v);
        *count = static_cast<int>(v.size());
    });
}

ckc_status ckc_labels_write_csv(const char* path, const int* labels, int count) {
    if (auto s = require(path, labels)) return s;
    return guarded([&] { ckc::write_labels_csv(path, {labels, static_cast<size_t>(count)}); });
}

ckc_status ckc_graph_load_csv(const char* path, int node_count, ckc_graph** out) {
    if (auto s = require(path, out)) return s;
    return guarded([&] { *out = new ckc_graph{ckc::load_graph_csv(path, node_count)}; });
}

ckc_status ckc_graph_write_csv(const char* path, const ckc_graph* g) {
    if (auto s = require(path, g)) return s;
    return guarded([&] { ckc::write_graph_csv(path, g->g); });
}

/* ----------------------- distance statistics --------------------- */

ckc_status ckc_u_center(const ckc_matrix* m, ckc_matrix** out) {
    if (auto s = require(m, out)) return s;
    return guarded([&] { *out = wrap(ckc::u_center(m->m)); });
}

ckc_status ckc_dcov_u(const double* x, const double* y, int n, double* out) {
    if (auto s = require(x, y, out)) return s;
    return guarded([&] {
        *out = ckc::dcov_u({x, static_cast<size_t>(n)}, {y, static_cast<size_t>(n)});
    });
}

ckc_status ckc_mdcov(const ckc_matrix* samples, int p, int q, double* out) {
    if (auto s = require(samples, out)) return s;
    return guarded([&] { *out = ckc::mdcov(samples->m, p, q); });
}

ckc_status ckc_mdcor(const ckc_matrix* samples, int p, int q, double* out) {
    if (auto s = require(samples, out)) return s;
    return guarded([&] { *out = ckc::mdcor(samples->m, p, q); });
}

/* --------------------- causal mapping / kernel ------------------- */

ckc_status ckc_normal_quantile(double p, double* out) {
    if (auto s = require(out)) return s;
    return guarded([&] { *out = ckc::normal_quantile(p); });
}

ckc_status ckc_chi_square_quantile_1df(double p, double* out) {
    if (auto s = require(out)) return s;
    return guarded([&] { *out = ckc::chi_square_quantile_1df(p); });
}

ckc_status ckc_phi(const ckc_matrix* samples, int i, double nu, ckc_matrix** out) {
    if (auto s = require(samples, out)) return s;
    return guarded([&] { *out = wrap(ckc::phi(samples->m, i, nu)); });
}

ckc_status ckc_aggregate_phi(const ckc_matrix* samples, double nu, ckc_matrix** out) {
    if (auto s = require(samples, out)) return s;
    return guarded([&] { *out = wrap(ckc::aggregate_phi(samples->m, nu)); });
}

ckc_status ckc_dependence_decision(const ckc_matrix* samples, int p, int q, double nu,
                                   int* verdict) {
    if (auto s = require(samples, verdict)) return s;
    return guarded([&] {
        *verdict = ckc::dependence_decision(samples->m, p, q, nu) == ckc::Dependence::Dependent;
    });
}

ckc_status ckc_kappa(const ckc_matrix* a, const ckc_matrix* b, double* out) {
    if (auto s = require(a, b, out)) return s;
    return guarded([&] { *out = ckc::kappa(a->m, b->m); });
}

ckc_status ckc_kernel_matrix(const ckc_matrix* samples, double nu, ckc_matrix** out) {
    if (auto s = require(samples, out)) return s;
    return guarded([&] { *out = wrap(ckc::kernel_matrix(samples->m, nu)); });
}

ckc_status ckc_heterogeneity_decision(const ckc_matrix* a, const ckc_matrix* b, double nu,
                                      int* verdict) {
    if (auto s = require(a, b, verdict)) return s;
    return guarded([&] { *verdict = ckc::heterogeneity_decision(a->m, b->m, nu) ? 1 : 0; });
}

/* --------------------------- clustering -------------------------- */

ckc_status ckc_kernel_kmeans(const ckc_matrix* kernel, int k, uint64_t seed, int max_iter,
                             int** labels, int* count, double* inertia, int* iterations) {
    if (auto s = require(kernel, labels, count)) return s;
    return guarded([&] {
        export_labels(ckc::kernel_kmeans(kernel->m, k, seed, max_iter), labels, count, inertia,
                      iterations);
    });
}

ckc_status ckc_cluster_pipeline(const ckc_matrix* samples, int k, double nu, uint64_t seed,
                                int max_iter, int** labels, int* count, double* inertia,
                                int* iterations) {
    if (auto s = require(samples, labels, count)) return s;
    return guarded([&] {
        export_labels(ckc::cluster_pipeline(samples->m, k, nu, seed, max_iter), labels, count,
                      inertia, iterations);
    });
}

ckc_status ckc_raw_kmeans(const ckc_matrix* samples, int k, uint64_t seed, int max_iter,
                          int** labels, int* count, double* inertia, int* iterations) {
    if (auto s = require(samples, labels, count)) return s;
    return guarded([&] {
        export_labels(ckc::raw_kmeans(samples->m, k, seed, max_iter), labels, count, inertia,
                      iterations);
    });
}

/* --------------------------- graph space ------------------------- */

ckc_status ckc_m_connectivity(const ckc_graph* g, int m_len, int** pairs, int* n_pairs) {
    if (auto s = require(g, pairs, n_pairs)) return s;
    return guarded([&] {
        const auto set = ckc::m_connectivity(g->g, m_len);
        std::vector<int> flat;
        flat.reserve(set.size() * 2);
        for (const auto& [a, b] : set) {
            flat.push_back(a);
            flat.push_back(b);
        }
        *pairs = copy_ints(flat);
        *n_pairs = static_cast<int>(set.size());
    });
}

ckc_status ckc_graphs_equivalent(const ckc_graph* a, const ckc_graph* b, int* out) {
    if (auto s = require(a, b, out)) return s;
    return guarded([&] { *out = ckc::graphs_equivalent(a->g, b->g) ? 1 : 0; });
}

ckc_status ckc_sign_matrix(const ckc_matrix* y, ckc_matrix** out) {
    if (auto s = require(y, out)) return s;
    return guarded([&] { *out = wrap(ckc::sign_matrix(y->m)); });
}

ckc_status ckc_matrices_equivalent(const ckc_matrix* a, const ckc_matrix* b, int* out) {
    if (auto s = require(a, b, out)) return s;
    return guarded([&] { *out = ckc::matrices_equivalent(a->m, b->m) ? 1 : 0; });
}

ckc_status ckc_indicator_from_graph(const ckc_graph* g, int m_len, ckc_matrix** out) {
    if (auto s = require(g, out)) return s;
    return guarded([&] { *out = wrap(ckc::indicator_from_graph(g->g, m_len)); });
}

/* ------------------------- synthetic data ------------------------ */

ckc_status ckc_gen_benchmark_groups(int k_groups, int n, int m, double edge_prob, int mu_mode,
                                    int nonlinear, double noise_scale, uint64_t seed,
                                    ckc_matrix** samples, int** labels, int* count) {
    if (auto s = require(samples, labels, count)) return s;
    return guarded([&] {
        ckc::GenConfig config;
        config.n = n;
        config.m = m;
        config.edge_prob = edge_prob;
        config.mu_mode = mu_mode_of(mu_mode);
        config.nonlinear = nonlinear != 0;
        config.noise_scale = noise_scale;
        config.seed = seed;
        auto data = ckc::benchmark_groups(k_groups, config);
        *samples = wrap(std::move(data.samples));
        *labels = copy_ints(data.labels);
        *count = static_cast<int>(data.labels.size());
    });
}

ckc_status ckc_gen_chain_vs_empty(int n_per_group, int m, double w_lo, double w_hi, int nonlinear,
                                  double noise_scale, int mu_mode, uint64_t seed,
                                  ckc_matrix** samples, int** labels, int* count) {
    if (auto s = require(samples, labels, count)) return s;
    return guarded([&] {
        auto data = ckc::chain_vs_empty(n_per_group, m, w_lo, w_hi, nonlinear != 0, noise_scale,
                                        mu_mode_of(mu_mode), seed);
        *samples = wrap(std::move(data.samples));
        *labels = copy_ints(data.labels);
        *count = static_cast<int>(data.labels.size());
    });
}

/* ----------------------------- metrics --------------------------- */

ckc_status ckc_v_measure(const int* true_labels, const int* pred_labels, int n, double* out) {
    if (auto s = require(true_labels, pred_labels, out)) return s;
    return guarded([&] {
        *out = ckc::v_measure({true_labels, static_cast<size_t>(n)},
                              {pred_labels, static_cast<size_t>(n)});
    });
}

ckc_status ckc_adjusted_rand_index(const int* true_labels, const int* pred_labels, int n,
                                   double* out) {
    if (auto s = require(true_labels, pred_labels, out)) return s;
    return guarded([&] {
        *out = ckc::adjusted_rand_index({true_labels, static_cast<size_t>(n)},
                                        {pred_labels, static_cast<size_t>(n)});
    });
}

ckc_status ckc_confusion_metrics(long tp, long tn, long fp, long fn, double* accuracy,
                                 double* recall, double* f1) {
    if (auto s = require(accuracy, recall, f1)) return s;
    return guarded([&] {
        const auto m = ckc::confusion_metrics({tp, tn, fp, fn});
        *accuracy = m.accuracy;
        *recall = m.recall;
        *f1 = m.f1;
    });
}

ckc_status ckc_rmse(const double* y, const double* yhat, int n, double* out) {
    if (auto s = require(y, yhat, out)) return s;
    return guarded([&] {
        *out = ckc::rmse({y, static_cast<size_t>(n)}, {yhat, static_cast<size_t>(n)});
    });
}

/* -------------------------- early warning ------------------------ */

void ckc_warn_config_default(ckc_warn_config* config) {
    if (!config) return;
    const ckc::WarnConfig d;
    config->window_w = d.window_w;
    config->embed_dim = d.embed_dim;
    config->max_lag = d.max_lag;
    config->lag_stride = d.lag_stride;
    config->t_stride = d.t_stride;
    config->nu = d.nu;
    config->tau = d.tau;
}

ckc_status ckc_warning_pipeline(const double* west, int n_west, const double* east, int n_east,
                                int len, const int* year_of_t, const ckc_warn_config* config,
                                int** years, double** yc_z, int* n_years, int** warned_years,
                                int* n_warned) {
    if (auto s = require(west, east, year_of_t, config, years, yc_z, n_years, warned_years,
                         n_warned))
        return s;
    return guarded([&] {
        ckc::NodeSeriesSet w, e;
        for (int i = 0; i < n_west; ++i)
            w.series.emplace_back(west + static_cast<size_t>(i) * len,
                                  west + static_cast<size_t>(i + 1) * len);
        for (int i = 0; i < n_east; ++i)
            e.series.emplace_back(east + static_cast<size_t>(i) * len,
                                  east + static_cast<size_t>(i + 1) * len);
        const auto result =
            ckc::warning_pipeline(w, e, {year_of_t, static_cast<size_t>(len)}, to_cpp(*config));
        export_warn(result, years, yc_z, n_years, warned_years, n_warned);
    });
}

ckc_status ckc_warning_pipeline_csv(const char* path, const char* west_group,
                                    const char* east_group, const ckc_warn_config* config,
                                    int** years, double** yc_z, int* n_years, int** warned_years,
                                    int* n_warned) {
    if (auto s =
            require(path, west_group, east_group, config, years, yc_z, n_years, warned_years,
                    n_warned))
        return s;
    return guarded([&] {
        const auto bundle =
            ckc::assemble_series(ckc::load_long_csv(path), west_group, east_group);
        ckc::NodeSeriesSet w{bundle.west}, e{bundle.east};
        const auto result = ckc::warning_pipeline(w, e, bundle.year_of_t, to_cpp(*config));
        export_warn(result, years, yc_z, n_years, warned_years, n_warned);
    });
}

/* ---------------------------- stability --------------------------- */

ckc_status ckc_stability_ranking(const ckc_matrix* samples, const double* target,
                                 const int* labels, int** order, double** variances,
                                 int* n_features) {
    if (auto s = require(samples, target, labels, order, variances, n_features)) return s;
    return guarded([&] {
        const size_t n = static_cast<size_t>(samples->m.rows());
        const auto coeffs = ckc::subgroup_regression(samples->m, {target, n}, {labels, n});
        const auto ranking = ckc::stability_ranking(ckc::feature_vectors(coeffs));
        *order = copy_ints(ranking.order);
        *variances = copy_doubles(ranking.variances);
        *n_features = static_cast<int>(ranking.order.size());
    });
}

ckc_status ckc_sta_error(const ckc_matrix* samples, const double* target, const int* labels,
                         int top_k, double* rmse_train, double* sta_error) {
    if (auto s = require(samples, target, labels, rmse_train, sta_error)) return s;
    return guarded([&] {
        const size_t n = static_cast<size_t>(samples->m.rows());
        const auto result = ckc::sta_error_eval(samples->m, {target, n}, {labels, n}, top_k);
        *rmse_train = result.rmse_train;
        *sta_error = result.sta_error;
    });
}

} /* extern "C" */
