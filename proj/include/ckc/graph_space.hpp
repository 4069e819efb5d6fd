#pragma once

#include <set>
#include <utility>
#include <vector>

#include "ckc/matrix.hpp"

namespace ckc {

struct CausalGraph {
    struct Edge {
        int parent = 0;
        int child = 0;
        double weight = 0.0;
    };

    int node_count = 0;
    std::vector<Edge> edges;
};

/// Largest node count accepted by the exact longest-simple-path search.
inline constexpr int kMaxGraphNodes = 12;

/// Unordered node pairs whose longest simple path on the undirected
/// skeleton has exactly m_len edges.
std::set<std::pair<int, int>> m_connectivity(const CausalGraph& g, int m_len);

/// Graph equivalence: matching m-connectivity sets for every path length.
bool graphs_equivalent(const CausalGraph& a, const CausalGraph& b);

/// Entrywise sign pattern: +1 where the entry is >= 0, -1 otherwise.
Matrix sign_matrix(const Matrix& y);

/// Causal-matrix equivalence: equal sign patterns.
bool matrices_equivalent(const Matrix& a, const Matrix& b);

/// Indicator matrix from one m-connectivity set: +1 at member pairs, -1
/// elsewhere (diagonal included).
Matrix indicator_from_graph(const CausalGraph& g, int m_len);

/// Topological order of a DAG; throws CyclicGraph on a cycle.
std::vector<int> topological_order(const CausalGraph& g);

}  // namespace ckc
