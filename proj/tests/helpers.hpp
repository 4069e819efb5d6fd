#pragma once

#include <cmath>
#include <vector>

#include "ckc/matrix.hpp"

namespace test_helpers {

inline ckc::Matrix make_matrix(int rows, int cols, std::vector<double> data) {
    return ckc::Matrix(rows, cols, std::move(data));
}

inline double max_abs_diff(const ckc::Matrix& a, const ckc::Matrix& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.storage().size(); ++i)
        worst = std::max(worst, std::fabs(a.storage()[i] - b.storage()[i]));
    return worst;
}

// Fixed 5x2 sample matrix shared by the mapping/kernel oracle tests.
inline ckc::Matrix oracle_samples() {
    return make_matrix(5, 2, {0.5, 2.0, -1.0, 0.3, 2.0, -0.7, 0.1, 1.4, 1.2, 0.6});
}

}  // namespace test_helpers
