#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "kplex/graph.hpp"
#include "kplex/vertex_set.hpp"

namespace kplex::testing {

inline Graph erdos_renyi(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph from_pairs(int n, std::vector<std::pair<int, int>> edges) { return Graph::from_edges(n, edges); }

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph::from_edges(n, edges);
}

inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, edges);
}

/// Johnson graph J(8,4) complement: 4-subsets of {0..7}, adjacent iff they share at most 2 elements.
inline Graph johnson8_4_4() {
    std::vector<unsigned> sets;
    for (unsigned m = 0; m < 256; ++m)
        if (__builtin_popcount(m) == 4) sets.push_back(m);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (__builtin_popcount(sets[i] & sets[j]) <= 2) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edges(static_cast<int>(sets.size()), edges);
}

/// Random branch over a dense graph: S a k-plex, C disjoint from S.
inline std::pair<VertexSet, VertexSet> random_branch(const DenseGraph& g, int k, std::mt19937_64& rng) {
    const int n = g.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet s = g.empty_set(), c = g.empty_set();
    std::uniform_int_distribution<int> s_target(0, std::min(n, 2 * k + 1));
    const int want = s_target(rng);
    std::bernoulli_distribution in_c(0.7);
    for (int v : order) {
        VertexSet t = s;
        t.set(static_cast<std::size_t>(v));
        if (s.count() < want && is_kplex(g, t, k))
            s = t;
        else if (in_c(rng))
            c.set(static_cast<std::size_t>(v));
    }
    return {s, c};
}

}  // namespace kplex::testing
