#include "ckc/graph_space.hpp"

#include <cmath>
#include <string>

namespace ckc {

namespace {

void check_graph(const CausalGraph& g) {
    if (g.node_count > kMaxGraphNodes)
        throw Error(ErrorCode::GraphTooLarge,
                    "exact longest-path search capped at " + std::to_string(kMaxGraphNodes) + " nodes");
    for (const auto& e : g.edges) {
        if (e.parent < 0 || e.parent >= g.node_count || e.child < 0 || e.child >= g.node_count)
            throw Error(ErrorCode::IndexOutOfRange, "edge endpoint outside node range");
        if (e.parent == e.child) throw Error(ErrorCode::OutOfDomain, "self-loop");
    }
}

// Longest simple path length between every node pair on the undirected
// skeleton, by subset DP over paths anchored at each start node.
// lengths[i][j] = -1 when no path exists.
std::vector<std::vector<int>> longest_path_lengths(const CausalGraph& g) {
    check_graph(g);
    const int n = g.node_count;
    std::vector<unsigned> adj(n, 0);
    for (const auto& e : g.edges) {
        adj[e.parent] |= 1u << e.child;
        adj[e.child] |= 1u << e.parent;
    }

    std::vector<std::vector<int>> best(n, std::vector<int>(n, -1));
    const unsigned full = n >= 32 ? ~0u : (1u << n) - 1u;
    std::vector<unsigned> reach(full + 1u);

    for (int start = 0; start < n; ++start) {
        // reach[mask] = set of endpoints of simple paths from `start` visiting exactly `mask`
        for (unsigned mask = 0; mask <= full; ++mask) reach[mask] = 0;
        reach[1u << start] = 1u << start;
        for (unsigned mask = 1u << start; mask <= full; ++mask) {
            unsigned ends = reach[mask];
            if (!ends || !(mask & (1u << start))) continue;
            const int len = __builtin_popcount(mask) - 1;
            while (ends) {
                const int v = __builtin_ctz(ends);
                ends &= ends - 1;
                if (len > best[start][v]) best[start][v] = len;
                unsigned nexts = adj[v] & ~mask;
                while (nexts) {
                    const int w = __builtin_ctz(nexts);
                    nexts &= nexts - 1;
                    reach[mask | (1u << w)] |= 1u << w;
                }
            }
        }
    }
    return best;
}

}  // namespace

std::set<std::pair<int, int>> m_connectivity(const CausalGraph& g, int m_len) {
    if (m_len < 1) throw Error(ErrorCode::OutOfDomain, "m_len must be >= 1");
    const auto lengths = longest_path_lengths(g);
    std::set<std::pair<int, int>> pairs;
    for (int i = 0; i < g.node_count; ++i)
        for (int j = i + 1; j < g.node_count; ++j)
            if (lengths[i][j] == m_len) pairs.insert({i, j});
    return pairs;
}

bool graphs_equivalent(const CausalGraph& a, const CausalGraph& b) {
    if (a.node_count != b.node_count)
        throw Error(ErrorCode::NodeCountMismatch, "graphs differ in node count");
    const auto la = longest_path_lengths(a);
    const auto lb = longest_path_lengths(b);
    for (int i = 0; i < a.node_count; ++i)
        for (int j = i + 1; j < a.node_count; ++j)
            if (la[i][j] != lb[i][j]) return false;
    return true;
}

Matrix sign_matrix(const Matrix& y) {
    for (double v : y.storage())
        if (!std::isfinite(v)) throw Error(ErrorCode::OutOfDomain, "non-finite entry");
    Matrix s(y.rows(), y.cols());
    for (int i = 0; i < y.rows(); ++i)
        for (int j = 0; j < y.cols(); ++j) s(i, j) = y(i, j) >= 0.0 ? 1.0 : -1.0;
    return s;
}

bool matrices_equivalent(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw Error(ErrorCode::ShapeMismatch, "matrices differ in shape");
    const Matrix sa = sign_matrix(a);
    const Matrix sb = sign_matrix(b);
    for (size_t i = 0; i < sa.storage().size(); ++i)
        if (sa.storage()[i] != sb.storage()[i]) return false;
    return true;
}

Matrix indicator_from_graph(const CausalGraph& g, int m_len) {
    const auto pairs = m_connectivity(g, m_len);
    Matrix ind(g.node_count, g.node_count, -1.0);
    for (const auto& [i, j] : pairs) {
        ind(i, j) = 1.0;
        ind(j, i) = 1.0;
    }
    return ind;
}

std::vector<int> topological_order(const CausalGraph& g) {
    for (const auto& e : g.edges)
        if (e.parent < 0 || e.parent >= g.node_count || e.child < 0 || e.child >= g.node_count)
            throw Error(ErrorCode::IndexOutOfRange, "edge endpoint outside node range");

    std::vector<int> indeg(g.node_count, 0);
    std::vector<std::vector<int>> children(g.node_count);
    for (const auto& e : g.edges) {
        ++indeg[e.child];
        children[e.parent].push_back(e.child);
    }

    std::vector<int> order;
    order.reserve(g.node_count);
    std::vector<int> ready;
    for (int i = 0; i < g.node_count; ++i)
        if (indeg[i] == 0) ready.push_back(i);
    while (!ready.empty()) {
        const int v = ready.front();
        ready.erase(ready.begin());
        order.push_back(v);
        for (int c : children[v])
            if (--indeg[c] == 0) ready.push_back(c);
    }
    if (static_cast<int>(order.size()) != g.node_count)
        throw Error(ErrorCode::CyclicGraph, "graph contains a cycle");
    return order;
}

}  // namespace ckc
