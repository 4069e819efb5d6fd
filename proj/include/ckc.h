/* C interface for the causal-kernel clustering library.
 *
 * Every function returns a ckc_status (CKC_OK on success). On failure the
 * out-parameters are left untouched and a human-readable message is
 * available from ckc_last_error() until the next call on the same thread.
 * Objects behind opaque handles and arrays returned through ** parameters
 * are owned by the caller and must be released with the matching free
 * function.
 */
#ifndef CKC_H
#define CKC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CKC_API __declspec(dllexport)
#else
#define CKC_API __attribute__((visibility("default")))
#endif

typedef enum ckc_status {
    CKC_OK = 0,
    CKC_ERR_DIMENSION_TOO_SMALL,
    CKC_ERR_DIMENSION_MISMATCH,
    CKC_ERR_INDEX_OUT_OF_RANGE,
    CKC_ERR_DEGENERATE_FEATURE,
    CKC_ERR_OUT_OF_DOMAIN,
    CKC_ERR_ZERO_NORM,
    CKC_ERR_FEATURE_COUNT_MISMATCH,
    CKC_ERR_BAD_K,
    CKC_ERR_EMPTY_INPUT,
    CKC_ERR_NODE_COUNT_MISMATCH,
    CKC_ERR_SHAPE_MISMATCH,
    CKC_ERR_GRAPH_TOO_LARGE,
    CKC_ERR_CYCLIC_GRAPH,
    CKC_ERR_LENGTH_MISMATCH,
    CKC_ERR_ZERO_DENOMINATOR,
    CKC_ERR_WINDOW_OUT_OF_RANGE,
    CKC_ERR_TOO_FEW_EMBEDDED_SAMPLES,
    CKC_ERR_TOO_FEW_YEARS,
    CKC_ERR_ZERO_VARIANCE,
    CKC_ERR_TOO_FEW_SUBGROUPS,
    CKC_ERR_ALL_SUBGROUPS_TOO_SMALL,
    CKC_ERR_PARSE,
    CKC_ERR_TOO_FEW_ROWS,
    CKC_ERR_IO,
    CKC_ERR_INVALID_ARGUMENT = 100,
    CKC_ERR_UNKNOWN = 127
} ckc_status;

/* Name of a status code (e.g. "DimensionTooSmall"). Never NULL. */
CKC_API const char* ckc_status_name(ckc_status status);

/* Message of the last failure on the calling thread; "" if none. */
CKC_API const char* ckc_last_error(void);

/* ----------------------------------------------------------------- */
/* Opaque handles                                                    */
/* ----------------------------------------------------------------- */

typedef struct ckc_matrix ckc_matrix; /* dense row-major double matrix */
typedef struct ckc_graph ckc_graph;   /* weighted directed graph       */

CKC_API ckc_status ckc_matrix_create(int rows, int cols, const double* data, ckc_matrix** out);
CKC_API int ckc_matrix_rows(const ckc_matrix* m);
CKC_API int ckc_matrix_cols(const ckc_matrix* m);
/* Row-major contiguous storage, valid for the handle's lifetime. */
CKC_API const double* ckc_matrix_data(const ckc_matrix* m);
CKC_API void ckc_matrix_free(ckc_matrix* m);

CKC_API ckc_status ckc_graph_create(int node_count, const int* parents, const int* children,
                                    const double* weights, int n_edges, ckc_graph** out);
CKC_API int ckc_graph_node_count(const ckc_graph* g);
CKC_API int ckc_graph_edge_count(const ckc_graph* g);
CKC_API ckc_status ckc_graph_edge(const ckc_graph* g, int index, int* parent, int* child,
                                  double* weight);
CKC_API void ckc_graph_free(ckc_graph* g);

/* Free arrays returned through int** / double** / char*** parameters. */
CKC_API void ckc_ints_free(int* p);
CKC_API void ckc_doubles_free(double* p);
CKC_API void ckc_strings_free(char** p, int count);

/* ----------------------------------------------------------------- */
/* CSV I/O                                                           */
/* ----------------------------------------------------------------- */

/* Sample matrix: one header row, numeric body, >= 4 rows, >= 2 columns. */
CKC_API ckc_status ckc_samples_load_csv(const char* path, ckc_matrix** out);
CKC_API ckc_status ckc_samples_write_csv(const char* path, const ckc_matrix* samples);

/* Generic numeric table with one header row; header strings returned too. */
CKC_API ckc_status ckc_table_load_csv(const char* path, ckc_matrix** values, char*** header,
                                      int* n_columns);

/* Header-less numeric matrix (kernel matrices). */
CKC_API ckc_status ckc_matrix_load_csv(const char* path, ckc_matrix** out);
CKC_API ckc_status ckc_matrix_write_csv(const char* path, const ckc_matrix* m);

/* Single integer column with header `label`. */
CKC_API ckc_status ckc_labels_load_csv(const char* path, int** labels, int* count);
CKC_API ckc_status ckc_labels_write_csv(const char* path, const int* labels, int count);

/* Edge list with header `parent,child,weight`; node_count < 0 infers it. */
CKC_API ckc_status ckc_graph_load_csv(const char* path, int node_count, ckc_graph** out);
CKC_API ckc_status ckc_graph_write_csv(const char* path, const ckc_graph* g);

/* ----------------------------------------------------------------- */
/* Distance statistics                                               */
/* ----------------------------------------------------------------- */

CKC_API ckc_status ckc_u_center(const ckc_matrix* m, ckc_matrix** out);
CKC_API ckc_status ckc_dcov_u(const double* x, const double* y, int n, double* out);
CKC_API ckc_status ckc_mdcov(const ckc_matrix* samples, int p, int q, double* out);
CKC_API ckc_status ckc_mdcor(const ckc_matrix* samples, int p, int q, double* out);

/* ----------------------------------------------------------------- */
/* Causal mapping and kernel                                         */
/* ----------------------------------------------------------------- */

CKC_API ckc_status ckc_normal_quantile(double p, double* out);
CKC_API ckc_status ckc_chi_square_quantile_1df(double p, double* out);
CKC_API ckc_status ckc_phi(const ckc_matrix* samples, int i, double nu, ckc_matrix** out);
CKC_API ckc_status ckc_aggregate_phi(const ckc_matrix* samples, double nu, ckc_matrix** out);
/* verdict: 1 = dependent, 0 = independent */
CKC_API ckc_status ckc_dependence_decision(const ckc_matrix* samples, int p, int q, double nu,
                                           int* verdict);
CKC_API ckc_status ckc_kappa(const ckc_matrix* a, const ckc_matrix* b, double* out);
CKC_API ckc_status ckc_kernel_matrix(const ckc_matrix* samples, double nu, ckc_matrix** out);
/* verdict: 1 = heterogeneous (summed cross kernel < 0), 0 = homogeneous */
CKC_API ckc_status ckc_heterogeneity_decision(const ckc_matrix* a, const ckc_matrix* b, double nu,
                                              int* verdict);

/* ----------------------------------------------------------------- */
/* Clustering                                                        */
/* ----------------------------------------------------------------- */

CKC_API ckc_status ckc_kernel_kmeans(const ckc_matrix* kernel, int k, uint64_t seed, int max_iter,
                                     int** labels, int* count, double* inertia, int* iterations);
CKC_API ckc_status ckc_cluster_pipeline(const ckc_matrix* samples, int k, double nu, uint64_t seed,
                                        int max_iter, int** labels, int* count, double* inertia,
                                        int* iterations);
CKC_API ckc_status ckc_raw_kmeans(const ckc_matrix* samples, int k, uint64_t seed, int max_iter,
                                  int** labels, int* count, double* inertia, int* iterations);

/* ----------------------------------------------------------------- */
/* Graph space                                                       */
/* ----------------------------------------------------------------- */

/* Pairs with longest simple path of exactly m_len edges; returned as a
 * flat array [a0, b0, a1, b1, ...] of length 2 * n_pairs. */
CKC_API ckc_status ckc_m_connectivity(const ckc_graph* g, int m_len, int** pairs, int* n_pairs);
CKC_API ckc_status ckc_graphs_equivalent(const ckc_graph* a, const ckc_graph* b, int* out);
CKC_API ckc_status ckc_sign_matrix(const ckc_matrix* y, ckc_matrix** out);
CKC_API ckc_status ckc_matrices_equivalent(const ckc_matrix* a, const ckc_matrix* b, int* out);
CKC_API ckc_status ckc_indicator_from_graph(const ckc_graph* g, int m_len, ckc_matrix** out);

/* ----------------------------------------------------------------- */
/* Synthetic data                                                    */
/* ----------------------------------------------------------------- */

/* mu_mode: 0 = zero, 1 = per-sample, 2 = per-feature */
CKC_API ckc_status ckc_gen_benchmark_groups(int k_groups, int n, int m, double edge_prob,
                                            int mu_mode, int nonlinear, double noise_scale,
                                            uint64_t seed, ckc_matrix** samples, int** labels,
                                            int* count);
CKC_API ckc_status ckc_gen_chain_vs_empty(int n_per_group, int m, double w_lo, double w_hi,
                                          int nonlinear, double noise_scale, int mu_mode,
                                          uint64_t seed, ckc_matrix** samples, int** labels,
                                          int* count);

/* ----------------------------------------------------------------- */
/* Evaluation metrics                                                */
/* ----------------------------------------------------------------- */

CKC_API ckc_status ckc_v_measure(const int* true_labels, const int* pred_labels, int n,
                                 double* out);
CKC_API ckc_status ckc_adjusted_rand_index(const int* true_labels, const int* pred_labels, int n,
                                           double* out);
CKC_API ckc_status ckc_confusion_metrics(long tp, long tn, long fp, long fn, double* accuracy,
                                         double* recall, double* f1);
CKC_API ckc_status ckc_rmse(const double* y, const double* yhat, int n, double* out);

/* ----------------------------------------------------------------- */
/* Early warning                                                     */
/* ----------------------------------------------------------------- */

typedef struct ckc_warn_config {
    int window_w;
    int embed_dim;
    int max_lag;
    int lag_stride;
    int t_stride;
    double nu;
    double tau;
} ckc_warn_config;

CKC_API void ckc_warn_config_default(ckc_warn_config* config);

/* west/east: row-major n_nodes x len series blocks. Outputs: per-year
 * standardized totals plus the warned year values. */
CKC_API ckc_status ckc_warning_pipeline(const double* west, int n_west, const double* east,
                                        int n_east, int len, const int* year_of_t,
                                        const ckc_warn_config* config, int** years, double** yc_z,
                                        int* n_years, int** warned_years, int* n_warned);

/* Same pipeline fed from a long-format CSV `node_id,group,date,value`
 * (dates ISO formatted; year taken from the first four characters). */
CKC_API ckc_status ckc_warning_pipeline_csv(const char* path, const char* west_group,
                                            const char* east_group,
                                            const ckc_warn_config* config, int** years,
                                            double** yc_z, int* n_years, int** warned_years,
                                            int* n_warned);

/* ----------------------------------------------------------------- */
/* Stability                                                         */
/* ----------------------------------------------------------------- */

/* Ascending-variance ranking of per-feature cross-subgroup coefficient
 * vectors. order and variances have one entry per feature. */
CKC_API ckc_status ckc_stability_ranking(const ckc_matrix* samples, const double* target,
                                         const int* labels, int** order, double** variances,
                                         int* n_features);
CKC_API ckc_status ckc_sta_error(const ckc_matrix* samples, const double* target,
                                 const int* labels, int top_k, double* rmse_train,
                                 double* sta_error);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CKC_H */
