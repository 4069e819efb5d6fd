#include <cstring>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ckc.h"
#include "doctest.h"

TEST_CASE("status names are stable and never null") {
    CHECK(std::string(ckc_status_name(CKC_OK)) == "Ok");
    CHECK(std::string(ckc_status_name(CKC_ERR_DIMENSION_TOO_SMALL)) == "DimensionTooSmall");
    CHECK(std::string(ckc_status_name(CKC_ERR_PARSE)) == "ParseError");
    CHECK(std::string(ckc_status_name(CKC_ERR_INVALID_ARGUMENT)) == "InvalidArgument");
    CHECK(std::string(ckc_status_name(static_cast<ckc_status>(9999))) == "Unknown");
}

TEST_CASE("library errors map onto status codes with messages") {
    const double x[3] = {1, 2, 3};
    double out = 0.0;
    CHECK(ckc_dcov_u(x, x, 3, &out) == CKC_ERR_DIMENSION_TOO_SMALL);
    CHECK(std::strlen(ckc_last_error()) > 0);

    CHECK(ckc_dcov_u(nullptr, x, 4, &out) == CKC_ERR_INVALID_ARGUMENT);
    CHECK(ckc_dcov_u(x, x, 4, nullptr) == CKC_ERR_INVALID_ARGUMENT);

    double q = 0.0;
    CHECK(ckc_normal_quantile(1.5, &q) == CKC_ERR_OUT_OF_DOMAIN);
}

TEST_CASE("matrix handles round trip data") {
    const double data[6] = {1, 2, 3, 4, 5, 6};
    ckc_matrix* m = nullptr;
    REQUIRE(ckc_matrix_create(2, 3, data, &m) == CKC_OK);
    CHECK(ckc_matrix_rows(m) == 2);
    CHECK(ckc_matrix_cols(m) == 3);
    const double* back = ckc_matrix_data(m);
    REQUIRE(back != nullptr);
    for (int i = 0; i < 6; ++i) CHECK(back[i] == data[i]);
    ckc_matrix_free(m);

    ckc_matrix* bad = nullptr;
    CHECK(ckc_matrix_create(0, 3, data, &bad) == CKC_ERR_SHAPE_MISMATCH);
    CHECK(bad == nullptr);
}

TEST_CASE("graph handles expose edges") {
    const int parents[2] = {0, 1};
    const int children[2] = {1, 2};
    const double weights[2] = {0.5, -1.5};
    ckc_graph* g = nullptr;
    REQUIRE(ckc_graph_create(3, parents, children, weights, 2, &g) == CKC_OK);
    CHECK(ckc_graph_node_count(g) == 3);
    CHECK(ckc_graph_edge_count(g) == 2);
    int p = 0, c = 0;
    double w = 0.0;
    REQUIRE(ckc_graph_edge(g, 1, &p, &c, &w) == CKC_OK);
    CHECK(p == 1);
    CHECK(c == 2);
    CHECK(w == -1.5);
    CHECK(ckc_graph_edge(g, 5, &p, &c, &w) == CKC_ERR_INDEX_OUT_OF_RANGE);
    ckc_graph_free(g);
}

TEST_CASE("scalar statistics agree with known values through the C layer") {
    const double x[4] = {1, 2, 3, 5};
    const double y[4] = {2, 1, 4, 8};
    double out = 0.0;
    REQUIRE(ckc_dcov_u(x, y, 4, &out) == CKC_OK);
    CHECK(out == doctest::Approx(1.3333333333333333).epsilon(1e-12));

    double nq = 0.0;
    REQUIRE(ckc_normal_quantile(0.975, &nq) == CKC_OK);
    CHECK(nq == doctest::Approx(1.959963984540054).epsilon(1e-9));
    double cq = 0.0;
    REQUIRE(ckc_chi_square_quantile_1df(0.95, &cq) == CKC_OK);
    CHECK(cq == doctest::Approx(3.841458820694124).epsilon(1e-9));
}

TEST_CASE("generation, clustering, and scoring flow through the C API") {
    ckc_matrix* samples = nullptr;
    int* true_labels = nullptr;
    int count = 0;
    REQUIRE(ckc_gen_chain_vs_empty(100, 5, 2.0, 3.0, 0, 0.0, 0, 6, &samples, &true_labels,
                                   &count) == CKC_OK);
    REQUIRE(count == 200);
    REQUIRE(ckc_matrix_rows(samples) == 200);

    int* pred = nullptr;
    int pred_count = 0;
    double inertia = 0.0;
    int iterations = 0;
    REQUIRE(ckc_cluster_pipeline(samples, 2, 0.05, 6, 100, &pred, &pred_count, &inertia,
                                 &iterations) == CKC_OK);
    REQUIRE(pred_count == 200);
    CHECK(iterations >= 1);

    double ari = 0.0;
    REQUIRE(ckc_adjusted_rand_index(true_labels, pred, 200, &ari) == CKC_OK);
    CHECK(ari > 0.1);

    int* pred2 = nullptr;
    int pred2_count = 0;
    REQUIRE(ckc_cluster_pipeline(samples, 2, 0.05, 6, 100, &pred2, &pred2_count, nullptr,
                                 nullptr) == CKC_OK);
    REQUIRE(pred2_count == 200);
    bool identical = true;
    for (int i = 0; i < 200; ++i) identical &= pred[i] == pred2[i];
    CHECK(identical);

    ckc_ints_free(pred2);
    ckc_ints_free(pred);
    ckc_ints_free(true_labels);
    ckc_matrix_free(samples);
}

TEST_CASE("m-connectivity pairs arrive as a flat array") {
    // Chain O2 - O1 - O3 - O4 from the worked example.
    const int parents[3] = {1, 0, 2};
    const int children[3] = {0, 2, 3};
    const double weights[3] = {1, 1, 1};
    ckc_graph* g = nullptr;
    REQUIRE(ckc_graph_create(4, parents, children, weights, 3, &g) == CKC_OK);

    int* pairs = nullptr;
    int n_pairs = 0;
    REQUIRE(ckc_m_connectivity(g, 2, &pairs, &n_pairs) == CKC_OK);
    REQUIRE(n_pairs == 2);
    std::set<std::pair<int, int>> got;
    for (int i = 0; i < n_pairs; ++i) got.insert({pairs[2 * i], pairs[2 * i + 1]});
    CHECK(got == std::set<std::pair<int, int>>{{0, 3}, {1, 2}});
    ckc_ints_free(pairs);

    int equivalent = -1;
    REQUIRE(ckc_graphs_equivalent(g, g, &equivalent) == CKC_OK);
    CHECK(equivalent == 1);
    ckc_graph_free(g);
}

TEST_CASE("phi and kappa agree with the native layer conventions") {
    const double data[10] = {0.5, 2.0, -1.0, 0.3, 2.0, -0.7, 0.1, 1.4, 1.2, 0.6};
    ckc_matrix* samples = nullptr;
    REQUIRE(ckc_matrix_create(5, 2, data, &samples) == CKC_OK);

    ckc_matrix* phi0 = nullptr;
    REQUIRE(ckc_phi(samples, 0, 0.05, &phi0) == CKC_OK);
    REQUIRE(ckc_matrix_rows(phi0) == 2);
    const double* p0 = ckc_matrix_data(phi0);
    CHECK(p0[0] == doctest::Approx(9.105887279860701).epsilon(1e-9));
    CHECK(p0[1] == doctest::Approx(-3.7459362125352627).epsilon(1e-9));

    double self_kappa = 0.0;
    REQUIRE(ckc_kappa(phi0, phi0, &self_kappa) == CKC_OK);
    CHECK(self_kappa == doctest::Approx(1.0).epsilon(1e-12));

    ckc_matrix* kernel = nullptr;
    REQUIRE(ckc_kernel_matrix(samples, 0.05, &kernel) == CKC_OK);
    CHECK(ckc_matrix_rows(kernel) == 5);
    const double* k = ckc_matrix_data(kernel);
    for (int i = 0; i < 5; ++i) CHECK(k[i * 5 + i] == doctest::Approx(1.0).epsilon(1e-12));

    ckc_matrix_free(kernel);
    ckc_matrix_free(phi0);
    ckc_matrix_free(samples);
}

TEST_CASE("confusion metrics and rmse through the C layer") {
    double accuracy = 0.0, recall = 0.0, f1 = 0.0;
    REQUIRE(ckc_confusion_metrics(13, 22, 2, 2, &accuracy, &recall, &f1) == CKC_OK);
    CHECK(accuracy == doctest::Approx(35.0 / 39.0).epsilon(1e-12));
    CHECK(recall == doctest::Approx(13.0 / 15.0).epsilon(1e-12));
    CHECK(f1 == doctest::Approx(26.0 / 30.0).epsilon(1e-12));

    const double y[2] = {0, 0};
    const double yhat[2] = {3, 4};
    double err = 0.0;
    REQUIRE(ckc_rmse(y, yhat, 2, &err) == CKC_OK);
    CHECK(err == doctest::Approx(3.5355339059327378).epsilon(1e-12));
}

TEST_CASE("warn config defaults are populated") {
    ckc_warn_config config;
    ckc_warn_config_default(&config);
    CHECK(config.window_w == 60);
    CHECK(config.embed_dim == 4);
    CHECK(config.max_lag == 100);
    CHECK(config.lag_stride == 10);
    CHECK(config.t_stride == 30);
    CHECK(config.nu == doctest::Approx(0.05));
    CHECK(config.tau == doctest::Approx(1.0));
}
