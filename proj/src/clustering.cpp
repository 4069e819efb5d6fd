#include "ckc/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ckc/causal_kernel.hpp"
#include "ckc/rng.hpp"

namespace ckc {

namespace {

double point_distance_sq(const Matrix& k, int i, int j) {
    return k(i, i) + k(j, j) - 2.0 * k(i, j);
}

// k-means++ seeding on kernel distances: first center uniform, each further
// center drawn with probability proportional to the squared distance to the
// nearest chosen center.
std::vector<int> seed_centers(const Matrix& k, int n_clusters, Rng& rng) {
    const int n = k.rows();
    std::vector<int> centers;
    centers.reserve(n_clusters);
    centers.push_back(static_cast<int>(rng.uniform_int(n)));

    std::vector<double> nearest(n);
    for (int i = 0; i < n; ++i) nearest[i] = point_distance_sq(k, i, centers[0]);

    while (static_cast<int>(centers.size()) < n_clusters) {
        double total = 0.0;
        for (double v : nearest) total += v;
        int chosen;
        if (total <= 0.0) {
            chosen = static_cast<int>(rng.uniform_int(n));
        } else {
            const double target = rng.uniform() * total;
            double acc = 0.0;
            chosen = n - 1;
            for (int i = 0; i < n; ++i) {
                acc += nearest[i];
                if (acc >= target) {
                    chosen = i;
                    break;
                }
            }
        }
        centers.push_back(chosen);
        for (int i = 0; i < n; ++i) nearest[i] = std::min(nearest[i], point_distance_sq(k, i, chosen));
    }
    return centers;
}

}  // namespace

ClusterAssignment kernel_kmeans(const Matrix& kernel, int n_clusters, uint64_t seed, int max_iter) {
    const int n = kernel.rows();
    if (n == 0) throw Error(ErrorCode::EmptyInput, "empty kernel matrix");
    if (n_clusters < 2 || n_clusters > n)
        throw Error(ErrorCode::BadK, "k must lie in [2, n], got " + std::to_string(n_clusters));
    if (max_iter < 1) throw Error(ErrorCode::BadK, "max_iter must be >= 1");

    Rng rng(seed);
    const auto centers = seed_centers(kernel, n_clusters, rng);

    // initial assignment: nearest seed point, ties toward the lowest index
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        int arg = 0;
        for (int c = 0; c < n_clusters; ++c) {
            const double d = point_distance_sq(kernel, i, centers[c]);
            if (d < best) {
                best = d;
                arg = c;
            }
        }
        labels[i] = arg;
    }

    std::vector<std::vector<int>> members(n_clusters);
    std::vector<double> cohesion(n_clusters);  // (1/|c|^2) sum_{j,j' in c} K[j,j']
    std::vector<double> dist(n_clusters);

    const auto rebuild_members = [&] {
        for (auto& m : members) m.clear();
        for (int i = 0; i < n; ++i) members[labels[i]].push_back(i);
    };

    // repair empty clusters with the point farthest from its own centroid
    const auto repair_empty = [&] {
        for (int c = 0; c < n_clusters; ++c) {
            if (!members[c].empty()) continue;
            double worst = -1.0;
            int worst_point = 0;
            for (int i = 0; i < n; ++i) {
                const auto& own = members[labels[i]];
                if (own.size() <= 1) continue;
                double s = 0.0;
                for (int j : own) s += kernel(i, j);
                double ss = 0.0;
                for (int j : own)
                    for (int j2 : own) ss += kernel(j, j2);
                const double d = kernel(i, i) - 2.0 * s / own.size() +
                                 ss / (static_cast<double>(own.size()) * own.size());
                if (d > worst) {
                    worst = d;
                    worst_point = i;
                }
            }
            members[labels[worst_point]].erase(
                std::find(members[labels[worst_point]].begin(), members[labels[worst_point]].end(),
                          worst_point));
            labels[worst_point] = c;
            members[c].push_back(worst_point);
        }
    };

    const auto compute_cohesion = [&] {
        for (int c = 0; c < n_clusters; ++c) {
            double ss = 0.0;
            for (int j : members[c])
                for (int j2 : members[c]) ss += kernel(j, j2);
            cohesion[c] = ss / (static_cast<double>(members[c].size()) * members[c].size());
        }
    };

    double inertia = std::numeric_limits<double>::infinity();
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        rebuild_members();
        repair_empty();
        compute_cohesion();

        double new_inertia = 0.0;
        bool changed = false;
        std::vector<int> new_labels(n);
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < n_clusters; ++c) {
                double s = 0.0;
                for (int j : members[c]) s += kernel(i, j);
                dist[c] = kernel(i, i) - 2.0 * s / members[c].size() + cohesion[c];
            }
            double best = dist[0];
            int arg = 0;
            for (int c = 1; c < n_clusters; ++c) {
                if (dist[c] < best) {  // strict: ties stay at the lowest index
                    best = dist[c];
                    arg = c;
                }
            }
            new_labels[i] = arg;
            new_inertia += best;
            changed |= arg != labels[i];
        }

        labels = std::move(new_labels);
        inertia = new_inertia;
        if (!changed) {
            ++iter;
            break;
        }
    }

    // the last assignment step may have emptied a cluster; restore the
    // invariant and refresh the inertia against the repaired partition
    rebuild_members();
    bool any_empty = false;
    for (const auto& m : members) any_empty |= m.empty();
    if (any_empty) {
        repair_empty();
        compute_cohesion();
        inertia = 0.0;
        for (int i = 0; i < n; ++i) {
            const int c = labels[i];
            double s = 0.0;
            for (int j : members[c]) s += kernel(i, j);
            inertia += kernel(i, i) - 2.0 * s / members[c].size() + cohesion[c];
        }
    }

    return ClusterAssignment{std::move(labels), n_clusters, inertia, iter};
}

ClusterAssignment cluster_pipeline(const Matrix& samples, int k, double nu, uint64_t seed,
                                   int max_iter) {
    return kernel_kmeans(kernel_matrix(samples, nu), k, seed, max_iter);
}

ClusterAssignment raw_kmeans(const Matrix& samples, int k, uint64_t seed, int max_iter) {
    // linear Gram matrix: kernel k-means distances reduce to plain Euclidean k-means
    const int n = samples.rows();
    Matrix gram(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = 0.0;
            for (int f = 0; f < samples.cols(); ++f) s += samples(i, f) * samples(j, f);
            gram(i, j) = s;
            gram(j, i) = s;
        }
    }
    return kernel_kmeans(gram, k, seed, max_iter);
}

}  // namespace ckc
