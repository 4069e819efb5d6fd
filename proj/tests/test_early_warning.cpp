#include <cmath>
#include <set>
#include <vector>

#include "ckc/early_warning.hpp"
#include "ckc/rng.hpp"
#include "doctest.h"

using ckc::Error;
using ckc::Matrix;
using ckc::WarnConfig;

namespace {

WarnConfig small_config() {
    WarnConfig c;
    c.window_w = 12;
    c.embed_dim = 3;
    c.max_lag = 4;
    c.lag_stride = 2;
    c.t_stride = 4;
    return c;
}

std::vector<double> noisy_sine(int len, double period, double noise, uint64_t seed) {
    ckc::Rng rng(seed);
    std::vector<double> out(len);
    for (int t = 0; t < len; ++t)
        out[t] = std::sin(2.0 * M_PI * t / period) + noise * rng.normal();
    return out;
}

}  // namespace

TEST_CASE("window_embed matches the worked example") {
    const std::vector<double> series{1, 2, 3, 4, 5, 6};
    const Matrix e = ckc::window_embed(series, 5, 5, 2);
    REQUIRE(e.rows() == 4);
    REQUIRE(e.cols() == 2);
    for (int r = 0; r < 4; ++r) {
        CHECK(e(r, 0) == doctest::Approx(r + 1.0));
        CHECK(e(r, 1) == doctest::Approx(r + 2.0));
    }
}

TEST_CASE("window_embed range and size validation") {
    const std::vector<double> series(20, 0.0);
    CHECK_THROWS_AS(ckc::window_embed(series, 25, 10, 3), Error);
    CHECK_THROWS_AS(ckc::window_embed(series, 5, 10, 3), Error);
    CHECK_THROWS_AS(ckc::window_embed(series, 10, 5, 3), Error);  // only 3 embedded rows
    const Matrix ok = ckc::window_embed(series, 20, 10, 3);
    CHECK(ok.rows() == 8);
}

TEST_CASE("lagged_kappa is symmetric at zero lag") {
    const auto a = noisy_sine(60, 13.0, 0.05, 1);
    const auto b = noisy_sine(60, 9.0, 0.05, 2);
    const auto c = small_config();
    const auto [fwd, bwd] = ckc::lagged_kappa(a, b, 40, 0, c);
    CHECK(fwd == doctest::Approx(bwd).epsilon(1e-12));
    CHECK(std::fabs(fwd) <= 1.0 + 1e-12);

    const auto [self_f, self_b] = ckc::lagged_kappa(a, a, 40, 0, c);
    CHECK(self_f == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(self_b == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("lagged_kappa values stay in [-1, 1] across lags") {
    const auto a = noisy_sine(80, 17.0, 0.1, 3);
    const auto b = noisy_sine(80, 11.0, 0.1, 4);
    const auto c = small_config();
    for (int theta = 0; theta <= 8; theta += 2) {
        const auto [fwd, bwd] = ckc::lagged_kappa(a, b, 70, theta, c);
        CHECK(std::fabs(fwd) <= 1.0 + 1e-12);
        CHECK(std::fabs(bwd) <= 1.0 + 1e-12);
    }
}

TEST_CASE("total_causal equals the lagged_kappa sum for a single pair") {
    const auto a = noisy_sine(60, 13.0, 0.05, 5);
    const auto b = noisy_sine(60, 7.0, 0.05, 6);
    const auto c = small_config();
    ckc::NodeSeriesSet west{{a}}, east{{b}};
    double expected = 0.0;
    for (int theta = 0; theta <= c.max_lag; theta += c.lag_stride) {
        const auto [fwd, bwd] = ckc::lagged_kappa(a, b, 50, theta, c);
        expected += fwd + bwd;
    }
    CHECK(ckc::total_causal(west, east, 50, c) == doctest::Approx(expected).epsilon(1e-12));
    // bound: 2 * |pairs| * |lags|
    CHECK(std::fabs(ckc::total_causal(west, east, 50, c)) <= 2.0 * 1.0 * 3.0 + 1e-9);
    CHECK_THROWS_AS(ckc::total_causal(ckc::NodeSeriesSet{}, east, 50, c), Error);
}

TEST_CASE("yearly_causal sums per year and standardizes") {
    const std::vector<double> tc{1.0, 2.0, 3.0, 4.0, 10.0, 20.0};
    const std::vector<int> years{1990, 1990, 1991, 1991, 1992, 1992};
    std::vector<int> out_years;
    const auto yc = ckc::yearly_causal(tc, years, &out_years);
    REQUIRE(yc.size() == 3);
    CHECK(out_years == std::vector<int>{1990, 1991, 1992});

    double mean = 0.0, var = 0.0;
    for (double v : yc) mean += v;
    mean /= 3.0;
    for (double v : yc) var += v * v;
    CHECK(std::fabs(mean) < 1e-9);
    CHECK(var / 3.0 == doctest::Approx(1.0).epsilon(1e-9));
    // raw sums 3, 7, 30 keep their ordering after standardization
    CHECK(yc[0] < yc[1]);
    CHECK(yc[1] < yc[2]);
}

TEST_CASE("yearly_causal error cases") {
    CHECK_THROWS_AS(ckc::yearly_causal(std::vector<double>{1.0, 1.0},
                                       std::vector<int>{1990, 1990}, nullptr),
                    Error);
    CHECK_THROWS_AS(ckc::yearly_causal(std::vector<double>{1.0, 1.0},
                                       std::vector<int>{1990, 1991, 1992}, nullptr),
                    Error);
    CHECK_THROWS_AS(ckc::yearly_causal(std::vector<double>{1.0, 1.0, 1.0},
                                       std::vector<int>{1990, 1991, 1992}, nullptr),
                    Error);  // constant totals -> zero variance
}

TEST_CASE("extract_warnings worked example") {
    const std::vector<double> yc{0.2, -1.5, -0.3};
    CHECK(ckc::extract_warnings(yc, 1.0) == std::set<int>{2});
}

TEST_CASE("extract_warnings boundary and threshold behavior") {
    CHECK(ckc::extract_warnings(std::vector<double>{-2.0, -1.0, -0.5, -0.1}, 1.0).empty());
    CHECK(ckc::extract_warnings(std::vector<double>{0.2, -1.5, -0.3}, 1e9).empty());
    // sign flip into a rising |z| is not an extremum
    CHECK(ckc::extract_warnings(std::vector<double>{0.2, -1.5, -2.5}, 1.0).empty());
    // one-sided boundary: the last index only needs to dominate its left neighbor
    CHECK(ckc::extract_warnings(std::vector<double>{0.2, 0.3, -1.5}, 1.0) == std::set<int>{3});
    CHECK_THROWS_AS(ckc::extract_warnings(std::vector<double>{1.0, -1.0}, 1.0), Error);
}

TEST_CASE("extract_warnings is monotone non-increasing in tau") {
    ckc::Rng rng(8);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> yc(8);
        for (double& v : yc) v = rng.normal();
        const auto low = ckc::extract_warnings(yc, 0.5);
        const auto high = ckc::extract_warnings(yc, 1.5);
        for (int w : high) CHECK(low.count(w) == 1);
    }
}

TEST_CASE("warning_pipeline runs deterministically on a small synthetic set") {
    const int len = 96;
    ckc::NodeSeriesSet west{{noisy_sine(len, 13.0, 0.05, 11)}};
    ckc::NodeSeriesSet east{{noisy_sine(len, 8.0, 0.3, 12)}};
    std::vector<int> year_of_t(len);
    for (int t = 0; t < len; ++t) year_of_t[t] = 2000 + t / 24;

    auto c = small_config();
    const auto a = ckc::warning_pipeline(west, east, year_of_t, c);
    const auto b = ckc::warning_pipeline(west, east, year_of_t, c);
    CHECK(a.years == b.years);
    CHECK(a.yc_z == b.yc_z);
    CHECK(a.warned_years == b.warned_years);
    CHECK(a.years.size() == a.yc_z.size());
    CHECK(a.years.front() == 2000);

    std::vector<int> short_years(10, 2000);
    CHECK_THROWS_AS(ckc::warning_pipeline(west, east, short_years, c), Error);
}
