#pragma once

#include <span>
#include <vector>

#include "ckc/error.hpp"

namespace ckc {

struct ConfusionCounts {
    long tp = 0;
    long tn = 0;
    long fp = 0;
    long fn = 0;
};

struct ConfusionMetrics {
    double accuracy = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Harmonic mean of homogeneity and completeness; 0 when both vanish.
double v_measure(std::span<const int> true_labels, std::span<const int> pred_labels);

/// Pair-counting adjusted Rand index via the contingency form.
double adjusted_rand_index(std::span<const int> true_labels, std::span<const int> pred_labels);

ConfusionMetrics confusion_metrics(const ConfusionCounts& c);

double rmse(std::span<const double> y, std::span<const double> yhat);

}  // namespace ckc
