#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kplex/vertex_set.hpp"

namespace kplex {

using Label = std::uint64_t;

/// Immutable simple undirected graph in CSR form. Every undirected edge has a
/// dense id (ordered by (min endpoint, max endpoint)); adjacency entries carry it.
class Graph {
public:
    Graph() = default;

    /// Builds from internal-id edge pairs. Self-loops and duplicate edges are
    /// dropped. `labels` maps internal id -> original label (identity if empty).
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges, std::vector<Label> labels = {}) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("label count does not match vertex count");

        std::vector<std::pair<int, int>> canon;
        canon.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
            if (u == v) continue;
            canon.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(canon.begin(), canon.end());
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

        Graph g;
        g.n_ = n;
        g.edges_ = std::move(canon);
        g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (auto [u, v] : g.edges_) {
            ++g.offsets_[static_cast<std::size_t>(u) + 1];
            ++g.offsets_[static_cast<std::size_t>(v) + 1];
        }
        for (int i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
        g.adj_.resize(g.edges_.size() * 2);
        g.adj_edge_.resize(g.edges_.size() * 2);
        std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
        // (u,x) with u < x sorts before every (x,v), so lists come out ascending.
        for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
            auto [u, v] = g.edges_[e];
            g.adj_[fill[u]] = v;
            g.adj_edge_[fill[u]++] = e;
            g.adj_[fill[v]] = u;
            g.adj_edge_[fill[v]++] = e;
        }
        if (labels.empty()) {
            labels.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) labels[i] = static_cast<Label>(i);
        }
        g.labels_ = std::move(labels);
        return g;
    }

    int n() const noexcept { return n_; }
    int m() const noexcept { return static_cast<int>(edges_.size()); }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
    }
    /// Edge ids aligned position-by-position with neighbors(v).
    std::span<const int> incident_edges(int v) const {
        return {adj_edge_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
    }
    int degree(int v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    std::pair<int, int> endpoints(int e) const { return edges_[e]; }
    std::span<const std::pair<int, int>> edges() const noexcept { return edges_; }

    bool adjacent(int u, int v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }
    /// Edge id of (u,v), or -1.
    int edge_id(int u, int v) const {
        auto nb = neighbors(u);
        auto it = std::lower_bound(nb.begin(), nb.end(), v);
        if (it == nb.end() || *it != v) return -1;
        return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
    }

    Label label(int v) const { return labels_[v]; }
    std::span<const Label> labels() const noexcept { return labels_; }

    int max_degree() const noexcept {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }
    double density() const noexcept {
        if (n_ < 2) return 0.0;
        return 2.0 * static_cast<double>(m()) / (static_cast<double>(n_) * (n_ - 1));
    }

private:
    int n_ = 0;
    std::vector<int> offsets_{0};
    std::vector<int> adj_;
    std::vector<int> adj_edge_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Label> labels_;
};

/// Adjacency-matrix graph for branch-level work; rows are VertexSets.
class DenseGraph {
public:
    DenseGraph() = default;
    explicit DenseGraph(int n) : n_(n), rows_(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n))) {}

    static DenseGraph from_graph(const Graph& g) {
        DenseGraph d(g.n());
        for (auto [u, v] : g.edges()) d.add_edge(u, v);
        return d;
    }

    void add_edge(int u, int v) {
        if (u == v) return;
        rows_[u].set(static_cast<std::size_t>(v));
        rows_[v].set(static_cast<std::size_t>(u));
    }

    int n() const noexcept { return n_; }
    const VertexSet& row(int v) const { return rows_[v]; }
    bool adjacent(int u, int v) const { return rows_[u].test(static_cast<std::size_t>(v)); }

    /// |N(v, s)|
    int degree_in(int v, const VertexSet& s) const { return rows_[v].intersect_count(s); }
    /// |N̄(v, s)|: non-neighbors of v in s, counting v itself when v ∈ s.
    int non_neighbors_in(int v, const VertexSet& s) const { return s.difference_count(rows_[v]); }

    VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(n_)); }

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;
};

struct DegeneracyResult {
    std::vector<int> order;     // peel sequence v_1..v_n
    std::vector<int> position;  // position[v] = index of v in order
    int delta = 0;
};

/// Min-degree peeling; ties go to the smallest id.
inline DegeneracyResult degeneracy_order(const Graph& g) {
    const int n = g.n();
    DegeneracyResult r;
    r.order.reserve(static_cast<std::size_t>(n));
    r.position.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> deg(static_cast<std::size_t>(n));
    using Entry = std::pair<int, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        heap.emplace(deg[v], v);
    }
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (r.position[v] >= 0 || d != deg[v]) continue;
        r.position[v] = static_cast<int>(r.order.size());
        r.order.push_back(v);
        r.delta = std::max(r.delta, d);
        for (int u : g.neighbors(v)) {
            if (r.position[u] >= 0) continue;
            heap.emplace(--deg[u], u);
        }
    }
    return r;
}

/// Every u ∈ s has at least |s| - k neighbors inside s.
inline bool is_kplex(const Graph& g, const VertexSet& s, int k) {
    const int size = s.count();
    bool ok = true;
    s.for_each([&](int u) {
        if (!ok) return;
        int inside = 0;
        for (int w : g.neighbors(u))
            if (s.test(static_cast<std::size_t>(w))) ++inside;
        if (inside < size - k) ok = false;
    });
    return ok;
}

inline bool is_kplex(const DenseGraph& g, const VertexSet& s, int k) {
    const int size = s.count();
    bool ok = true;
    s.for_each([&](int u) {
        if (ok && g.degree_in(u, s) < size - k) ok = false;
    });
    return ok;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // child id -> parent id (ascending)
};

/// Induced subgraph on `vertices` (any order, no duplicates) keeping only edges
/// accepted by `keep_edge(edge_id)`. Child ids follow the order of `vertices`.
/// `scratch` must have size g.n() and be all -1; it is restored before return.
template <class EdgePred>
Graph induced_on(const Graph& g, std::span<const int> vertices, EdgePred&& keep_edge, std::vector<int>& scratch) {
    const int sub_n = static_cast<int>(vertices.size());
    for (int i = 0; i < sub_n; ++i) scratch[vertices[i]] = i;
    std::vector<std::pair<int, int>> edges;
    std::vector<Label> labels;
    labels.reserve(vertices.size());
    for (int i = 0; i < sub_n; ++i) {
        const int v = vertices[i];
        labels.push_back(g.label(v));
        auto nb = g.neighbors(v);
        auto ids = g.incident_edges(v);
        for (std::size_t j = 0; j < nb.size(); ++j) {
            const int w = scratch[nb[j]];
            if (w > i && keep_edge(ids[j])) edges.emplace_back(i, w);
        }
    }
    for (int v : vertices) scratch[v] = -1;
    return Graph::from_edges(sub_n, edges, std::move(labels));
}

/// Same as induced_on but produces an adjacency matrix.
template <class EdgePred>
DenseGraph dense_induced_on(const Graph& g, std::span<const int> vertices, EdgePred&& keep_edge,
                            std::vector<int>& scratch) {
    const int sub_n = static_cast<int>(vertices.size());
    for (int i = 0; i < sub_n; ++i) scratch[vertices[i]] = i;
    DenseGraph d(sub_n);
    for (int i = 0; i < sub_n; ++i) {
        auto nb = g.neighbors(vertices[i]);
        auto ids = g.incident_edges(vertices[i]);
        for (std::size_t j = 0; j < nb.size(); ++j) {
            const int w = scratch[nb[j]];
            if (w > i && keep_edge(ids[j])) d.add_edge(i, w);
        }
    }
    for (int v : vertices) scratch[v] = -1;
    return d;
}

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.to_parent = s.to_vector();
    std::vector<int> scratch(static_cast<std::size_t>(g.n()), -1);
    out.graph = induced_on(g, out.to_parent, [](int) { return true; }, scratch);
    return out;
}

/// {v} ∪ N(v) ∪ N(N(v)) over edges accepted by `keep_edge`, as a list with v first.
/// `mark` must have size g.n() and be all false; it is restored before return.
template <class EdgePred>
std::vector<int> two_hop_list(const Graph& g, int v, EdgePred&& keep_edge, std::vector<char>& mark) {
    std::vector<int> out{v};
    mark[v] = 1;
    auto nb = g.neighbors(v);
    auto ids = g.incident_edges(v);
    for (std::size_t j = 0; j < nb.size(); ++j) {
        if (!keep_edge(ids[j]) || mark[nb[j]]) continue;
        mark[nb[j]] = 1;
        out.push_back(nb[j]);
    }
    const std::size_t first_hop_end = out.size();
    for (std::size_t i = 1; i < first_hop_end; ++i) {
        const int u = out[i];
        auto nb2 = g.neighbors(u);
        auto ids2 = g.incident_edges(u);
        for (std::size_t j = 0; j < nb2.size(); ++j) {
            if (!keep_edge(ids2[j]) || mark[nb2[j]]) continue;
            mark[nb2[j]] = 1;
            out.push_back(nb2[j]);
        }
    }
    for (int u : out) mark[u] = 0;
    return out;
}

inline VertexSet two_hop_closure(const Graph& g, int v) {
    std::vector<char> mark(static_cast<std::size_t>(g.n()), 0);
    return VertexSet::of(static_cast<std::size_t>(g.n()), two_hop_list(g, v, [](int) { return true; }, mark));
}

/// |N(u) ∩ N(v)| by sorted merge.
inline int common_neighbor_count(const Graph& g, int u, int v) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    int c = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++c; ++i; ++j; }
    }
    return c;
}

}  // namespace kplex
