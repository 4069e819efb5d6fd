#include <cmath>

#include "ckc/graph_space.hpp"
#include "ckc/synth.hpp"
#include "doctest.h"
#include "helpers.hpp"

using ckc::CausalGraph;
using ckc::Error;
using ckc::Matrix;
using ckc::Rng;

TEST_CASE("random_dag is acyclic with bounded weights") {
    Rng rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        const CausalGraph g = ckc::random_dag(6, 0.5, rng);
        CHECK(g.node_count == 6);
        CHECK_NOTHROW(ckc::topological_order(g));
        for (const auto& e : g.edges) {
            CHECK(std::fabs(e.weight) >= 0.5);
            CHECK(std::fabs(e.weight) <= 2.0);
        }
    }
}

TEST_CASE("chain_dag links consecutive features") {
    Rng rng(9);
    const CausalGraph g = ckc::chain_dag(4, 1.0, 2.0, rng);
    REQUIRE(g.edges.size() == 3);
    for (int j = 0; j < 3; ++j) {
        CHECK(g.edges[j].parent == j);
        CHECK(g.edges[j].child == j + 1);
        CHECK(std::fabs(g.edges[j].weight) >= 1.0);
        CHECK(std::fabs(g.edges[j].weight) <= 2.0);
    }
}

TEST_CASE("apply_sem adds weighted parent values in the linear case") {
    const Matrix base = test_helpers::make_matrix(4, 3, {1.0, 0.0, 0.0,  //
                                                         2.0, 1.0, 0.0,  //
                                                         0.0, 2.0, 1.0,  //
                                                         1.0, 1.0, 1.0});
    const CausalGraph chain{3, {{0, 1, 2.0}, {1, 2, -1.0}}};
    Rng rng(0);
    const Matrix out = ckc::apply_sem(base, chain, false, 0.0, rng);
    // x1 = b1 + 2 b0; x2 = b2 - x1
    for (int i = 0; i < 4; ++i) {
        const double x1 = base(i, 1) + 2.0 * base(i, 0);
        CHECK(out(i, 0) == base(i, 0));
        CHECK(out(i, 1) == doctest::Approx(x1).epsilon(1e-12));
        CHECK(out(i, 2) == doctest::Approx(base(i, 2) - x1).epsilon(1e-12));
    }
}

TEST_CASE("apply_sem validates shape and acyclicity") {
    Rng rng(1);
    const Matrix base(4, 2, 0.0);
    CHECK_THROWS_AS(ckc::apply_sem(base, CausalGraph{3, {}}, false, 0.0, rng), Error);
    const CausalGraph cyclic{2, {{0, 1, 1.0}, {1, 0, 1.0}}};
    CHECK_THROWS_AS(ckc::apply_sem(base, cyclic, false, 0.0, rng), Error);
}

TEST_CASE("gen_base respects the mu modes") {
    ckc::GenConfig cfg;
    cfg.n = 50;
    cfg.m = 4;
    Rng rng_zero(3);
    cfg.mu_mode = ckc::MuMode::Zero;
    const Matrix zero = ckc::gen_base(cfg, rng_zero);
    double mean = 0.0;
    for (double v : zero.storage()) mean += v;
    mean /= static_cast<double>(zero.storage().size());
    CHECK(std::fabs(mean) < 1.0);  // no offset applied

    Rng rng_feat(3);
    cfg.mu_mode = ckc::MuMode::PerFeature;
    const Matrix shifted = ckc::gen_base(cfg, rng_feat);
    CHECK(shifted.rows() == 50);
    CHECK(shifted.cols() == 4);
}

TEST_CASE("benchmark_groups concatenates labeled groups deterministically") {
    ckc::GenConfig cfg;
    cfg.n = 10;
    cfg.m = 3;
    cfg.seed = 77;
    const auto a = ckc::benchmark_groups(3, cfg);
    const auto b = ckc::benchmark_groups(3, cfg);
    CHECK(a.samples.rows() == 30);
    CHECK(a.labels.size() == 30);
    CHECK(a.labels.front() == 0);
    CHECK(a.labels.back() == 2);
    CHECK(a.labels == b.labels);
    CHECK(test_helpers::max_abs_diff(a.samples, b.samples) == 0.0);
    CHECK_THROWS_AS(ckc::benchmark_groups(1, cfg), Error);
}

TEST_CASE("chain_vs_empty produces two labeled groups") {
    const auto data = ckc::chain_vs_empty(12, 4, 1.0, 2.0, false, 0.0, ckc::MuMode::Zero, 5);
    CHECK(data.samples.rows() == 24);
    CHECK(data.samples.cols() == 4);
    for (int i = 0; i < 12; ++i) {
        CHECK(data.labels[i] == 0);
        CHECK(data.labels[12 + i] == 1);
    }
    const auto rerun = ckc::chain_vs_empty(12, 4, 1.0, 2.0, false, 0.0, ckc::MuMode::Zero, 5);
    CHECK(test_helpers::max_abs_diff(data.samples, rerun.samples) == 0.0);
    const auto other = ckc::chain_vs_empty(12, 4, 1.0, 2.0, false, 0.0, ckc::MuMode::Zero, 6);
    CHECK(test_helpers::max_abs_diff(data.samples, other.samples) > 0.0);
}

TEST_CASE("Rng streams are reproducible and distinct across seeds") {
    Rng a(123), b(123), c(124);
    bool all_equal = true;
    bool any_diff = false;
    for (int i = 0; i < 100; ++i) {
        const double va = a.uniform();
        all_equal &= va == b.uniform();
        any_diff |= va != c.uniform();
    }
    CHECK(all_equal);
    CHECK(any_diff);

    Rng n1(9), n2(9);
    for (int i = 0; i < 10; ++i) CHECK(n1.normal() == n2.normal());
    Rng u(3);
    for (int i = 0; i < 1000; ++i) {
        const double v = u.uniform(2.0, 5.0);
        CHECK(v >= 2.0);
        CHECK(v < 5.0);
    }
}
