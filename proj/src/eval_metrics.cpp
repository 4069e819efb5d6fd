#include "ckc/eval_metrics.hpp"

#include <cmath>
#include <map>

namespace ckc {

namespace {

std::map<int, long> label_counts(std::span<const int> labels) {
    std::map<int, long> counts;
    for (int v : labels) ++counts[v];
    return counts;
}

double entropy(const std::map<int, long>& counts, double n) {
    double h = 0.0;
    for (const auto& [_, c] : counts) {
        const double p = c / n;
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

}  // namespace

double v_measure(std::span<const int> true_labels, std::span<const int> pred_labels) {
    if (true_labels.size() != pred_labels.size() || true_labels.empty())
        throw Error(ErrorCode::LengthMismatch, "label vectors must match and be non-empty");
    const double n = static_cast<double>(true_labels.size());

    const auto ct = label_counts(true_labels);
    const auto cp = label_counts(pred_labels);
    std::map<std::pair<int, int>, long> joint;
    for (size_t i = 0; i < true_labels.size(); ++i) ++joint[{true_labels[i], pred_labels[i]}];

    const double h_true = entropy(ct, n);
    const double h_pred = entropy(cp, n);
    double h_joint = 0.0;
    for (const auto& [_, c] : joint) {
        const double p = c / n;
        h_joint -= p * std::log(p);
    }
    const double h_true_given_pred = h_joint - h_pred;
    const double h_pred_given_true = h_joint - h_true;

    // single-class conventions: one true class -> homogeneity 1; one
    // predicted class -> completeness 1
    const double homogeneity = h_true > 0.0 ? 1.0 - h_true_given_pred / h_true : 1.0;
    const double completeness = h_pred > 0.0 ? 1.0 - h_pred_given_true / h_pred : 1.0;
    if (homogeneity + completeness == 0.0) return 0.0;
    return 2.0 * homogeneity * completeness / (homogeneity + completeness);
}

double adjusted_rand_index(std::span<const int> true_labels, std::span<const int> pred_labels) {
    if (true_labels.size() != pred_labels.size() || true_labels.size() < 2)
        throw Error(ErrorCode::LengthMismatch, "label vectors must match with length >= 2");
    const double n = static_cast<double>(true_labels.size());

    const auto ct = label_counts(true_labels);
    const auto cp = label_counts(pred_labels);
    std::map<std::pair<int, int>, long> joint;
    for (size_t i = 0; i < true_labels.size(); ++i) ++joint[{true_labels[i], pred_labels[i]}];

    auto comb2 = [](double x) { return x * (x - 1.0) / 2.0; };
    double sum_joint = 0.0, sum_true = 0.0, sum_pred = 0.0;
    for (const auto& [_, c] : joint) sum_joint += comb2(static_cast<double>(c));
    for (const auto& [_, c] : ct) sum_true += comb2(static_cast<double>(c));
    for (const auto& [_, c] : cp) sum_pred += comb2(static_cast<double>(c));

    const double total = comb2(n);
    const double expected = sum_true * sum_pred / total;
    const double max_index = 0.5 * (sum_true + sum_pred);
    if (max_index == expected) return 1.0;  // both partitions trivial or identical structure
    return (sum_joint - expected) / (max_index - expected);
}

ConfusionMetrics confusion_metrics(const ConfusionCounts& c) {
    if (c.tp < 0 || c.tn < 0 || c.fp < 0 || c.fn < 0)
        throw Error(ErrorCode::OutOfDomain, "negative confusion count");
    const double total = static_cast<double>(c.tp + c.tn + c.fp + c.fn);
    if (total == 0.0) throw Error(ErrorCode::ZeroDenominator, "empty confusion matrix");

    ConfusionMetrics out;
    out.accuracy = (c.tp + c.tn) / total;
    if (c.tp + c.fn == 0) throw Error(ErrorCode::ZeroDenominator, "recall undefined: tp + fn = 0");
    out.recall = static_cast<double>(c.tp) / (c.tp + c.fn);
    if (2 * c.tp + c.fp + c.fn == 0) throw Error(ErrorCode::ZeroDenominator, "f1 undefined");
    out.f1 = 2.0 * c.tp / static_cast<double>(2 * c.tp + c.fp + c.fn);
    return out;
}

double rmse(std::span<const double> y, std::span<const double> yhat) {
    if (y.size() != yhat.size() || y.empty())
        throw Error(ErrorCode::LengthMismatch, "vectors must match and be non-empty");
    double s = 0.0;
    for (size_t i = 0; i < y.size(); ++i) {
        const double d = y[i] - yhat[i];
        s += d * d;
    }
    return std::sqrt(s / static_cast<double>(y.size()));
}

}  // namespace ckc
