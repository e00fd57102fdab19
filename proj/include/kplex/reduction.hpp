#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <utility>
#include <vector>

#include "kplex/graph.hpp"

namespace kplex {

/// Degree and triangle thresholds derived from the current lower bound.
/// A vertex with degree <= tau_v, or an edge with <= tau_e common neighbors,
/// cannot be part of a k-plex with lb+1 vertices.
struct Thresholds {
    int tau_v = -1;
    int tau_e = -1;

    static constexpr Thresholds from_lower_bound(int lb, int k) noexcept { return {lb - k, lb - 2 * k}; }
};

struct ReductionCounters {
    std::int64_t invocations = 0;
    std::int64_t vertices_removed = 0;
    std::int64_t edges_removed = 0;
    std::int64_t truss_edges_removed = 0;  // removed for having too few triangles
    std::int64_t triangle_counts = 0;      // per-edge counts materialized
    std::int64_t triangle_updates = 0;     // decrements applied while draining removed edges
};

/// Alive subgraph as plain flags (used to compare reduction results).
struct AliveSets {
    std::vector<char> vertices;
    std::vector<char> edges;
    friend bool operator==(const AliveSets&, const AliveSets&) = default;
};

/// Working state of the core-truss co-pruning over one input graph. Memory is
/// O(n + m): per edge a triangle count, the tick at which it was taken and the
/// tick at which the edge was removed.
class ReductionState {
public:
    using Tick = std::uint64_t;
    static constexpr Tick kNever = ~Tick{0};

    explicit ReductionState(const Graph& g)
        : g_(&g),
          vertex_alive_(static_cast<std::size_t>(g.n()), 1),
          edge_alive_(static_cast<std::size_t>(g.m()), 1),
          degree_(static_cast<std::size_t>(g.n())),
          triangles_(static_cast<std::size_t>(g.m()), 0),
          counted_at_(static_cast<std::size_t>(g.m()), kNever),
          removed_at_(static_cast<std::size_t>(g.m()), kNever),
          alive_vertices_(g.n()),
          alive_edges_(g.m()) {
        for (int v = 0; v < g.n(); ++v) degree_[v] = g.degree(v);
    }
    /// The state keeps a reference to the graph.
    explicit ReductionState(Graph&&) = delete;

    const Graph& graph() const noexcept { return *g_; }
    bool vertex_alive(int v) const { return vertex_alive_[v] != 0; }
    bool edge_alive(int e) const { return edge_alive_[e] != 0; }
    int degree(int v) const { return degree_[v]; }
    int alive_vertex_count() const noexcept { return alive_vertices_; }
    int alive_edge_count() const noexcept { return alive_edges_; }
    bool counts_materialized() const noexcept { return counts_materialized_; }
    /// Current triangle count of an alive edge (valid once counts are materialized).
    int triangle_count(int e) const { return triangles_[e]; }
    Tick counted_at(int e) const { return counted_at_[e]; }
    Tick removed_at(int e) const { return removed_at_[e]; }
    Tick tick() const noexcept { return tick_; }
    const ReductionCounters& counters() const noexcept { return counters_; }

    AliveSets alive_sets() const { return {vertex_alive_, edge_alive_}; }

    std::vector<int> alive_vertex_list() const {
        std::vector<int> out;
        for (int v = 0; v < g_->n(); ++v)
            if (vertex_alive_[v]) out.push_back(v);
        return out;
    }

    /// Alive vertices whose degree dropped since the last call (may repeat).
    std::vector<int> take_touched() { return std::exchange(touched_, {}); }

    /// Deletes every alive vertex with alive-degree <= tau_v, cascading.
    /// Returns the edges deleted on the way, in removal order.
    std::vector<int> core_prune(int tau_v) {
        std::vector<int> removed;
        std::vector<int> queue;
        for (int v = 0; v < g_->n(); ++v)
            if (vertex_alive_[v] && degree_[v] <= tau_v) queue.push_back(v);
        peel(queue, tau_v, removed);
        last_tau_v_ = tau_v;
        core_valid_ = true;
        return removed;
    }

    /// Deletes alive edge e, then restores the (tau_v+1)-core. Returns e
    /// followed by every edge removed by the cascade.
    std::vector<int> remove_edge(int e, int tau_v) {
        std::vector<int> removed;
        remove_edge_into(e, tau_v, removed);
        return removed;
    }

    /// One core-pruning-first co-pruning pass. Removes q_v, restores the
    /// (tau_v+1)-core, and (on a new lower bound or first use) rescans every
    /// alive edge against tau_e; removed edges are then drained to update the
    /// triangle counts of the edges they shared a triangle with.
    void cf_ctcp(std::span<const int> q_v, Thresholds th, bool lb_changed) {
        ++counters_.invocations;
        std::vector<int> removed;
        std::vector<int> seeds;
        for (int v : q_v)
            if (vertex_alive_[v]) remove_vertex(v, th.tau_v, removed, seeds);
        if (!core_valid_ || th.tau_v != last_tau_v_) {
            for (int v = 0; v < g_->n(); ++v)
                if (vertex_alive_[v] && degree_[v] <= th.tau_v) seeds.push_back(v);
        }
        peel(seeds, th.tau_v, removed);
        last_tau_v_ = th.tau_v;
        core_valid_ = true;

        std::deque<int> pending(removed.begin(), removed.end());
        std::vector<int> batch;
        // Counts that were never taken have to be taken before truss pruning
        // means anything, so the first call always scans.
        if (lb_changed || !counts_materialized_) {
            const bool first = !counts_materialized_;
            for (int e = 0; e < g_->m(); ++e) {
                if (!edge_alive_[e]) continue;
                if (first) {
                    triangles_[e] = count_alive_triangles(e);
                    counted_at_[e] = ++tick_;
                    ++counters_.triangle_counts;
                }
                if (triangles_[e] <= th.tau_e) {
                    batch.clear();
                    ++counters_.truss_edges_removed;
                    remove_edge_into(e, th.tau_v, batch);
                    pending.insert(pending.end(), batch.begin(), batch.end());
                }
            }
            counts_materialized_ = true;
        }

        while (!pending.empty()) {
            const int e = pending.front();
            pending.pop_front();
            auto [u, v] = g_->endpoints(e);
            if (vertex_alive_[u]) drain_side(u, v, e, th, pending, batch);
            if (vertex_alive_[v]) drain_side(v, u, e, th, pending, batch);
        }
    }

private:
    void remove_vertex(int v, int tau_v, std::vector<int>& removed, std::vector<int>& seeds) {
        vertex_alive_[v] = 0;
        --alive_vertices_;
        ++counters_.vertices_removed;
        auto nb = g_->neighbors(v);
        auto ids = g_->incident_edges(v);
        for (std::size_t j = 0; j < nb.size(); ++j) {
            const int e = ids[j];
            if (!edge_alive_[e]) continue;
            kill_edge(e);
            removed.push_back(e);
            const int w = nb[j];
            if (degree_[w] <= tau_v) seeds.push_back(w);
        }
    }

    void kill_edge(int e) {
        edge_alive_[e] = 0;
        removed_at_[e] = ++tick_;
        --alive_edges_;
        ++counters_.edges_removed;
        auto [u, v] = g_->endpoints(e);
        --degree_[u];
        --degree_[v];
        if (vertex_alive_[u]) touched_.push_back(u);
        if (vertex_alive_[v]) touched_.push_back(v);
    }

    void peel(std::vector<int>& stack, int tau_v, std::vector<int>& removed) {
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            if (!vertex_alive_[v] || degree_[v] > tau_v) continue;
            remove_vertex(v, tau_v, removed, stack);
        }
    }

    void remove_edge_into(int e, int tau_v, std::vector<int>& removed) {
        kill_edge(e);
        removed.push_back(e);
        auto [u, v] = g_->endpoints(e);
        std::vector<int> seeds;
        if (vertex_alive_[u] && degree_[u] <= tau_v) seeds.push_back(u);
        if (vertex_alive_[v] && degree_[v] <= tau_v) seeds.push_back(v);
        peel(seeds, tau_v, removed);
    }

    int count_alive_triangles(int e) const {
        auto [u, v] = g_->endpoints(e);
        auto a = g_->neighbors(u), b = g_->neighbors(v);
        auto ea = g_->incident_edges(u), eb = g_->incident_edges(v);
        int c = 0;
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) ++i;
            else if (a[i] > b[j]) ++j;
            else {
                if (edge_alive_[ea[i]] && edge_alive_[eb[j]]) ++c;
                ++i;
                ++j;
            }
        }
        return c;
    }

    // Removed edge `e` = (a,b) with `a` alive: every edge (a,w) that counted
    // the triangle (a,b,w) loses it, unless the third edge (b,w) was removed
    // earlier and already accounted for it.
    void drain_side(int a, int b, int e, Thresholds th, std::deque<int>& pending, std::vector<int>& batch) {
        const Tick e_removed = removed_at_[e];
        auto na = g_->neighbors(a), nb = g_->neighbors(b);
        auto ea = g_->incident_edges(a), eb = g_->incident_edges(b);
        std::size_t i = 0, j = 0;
        while (i < na.size() && j < nb.size()) {
            if (na[i] < nb[j]) { ++i; continue; }
            if (na[i] > nb[j]) { ++j; continue; }
            const int aw = ea[i], bw = eb[j];
            ++i;
            ++j;
            if (!edge_alive_[aw]) continue;
            if (counted_at_[aw] > e_removed) continue;  // e was already gone when aw was counted
            if (!edge_alive_[bw] && removed_at_[bw] < e_removed) continue;
            ++counters_.triangle_updates;
            if (--triangles_[aw] <= th.tau_e) {
                batch.clear();
                ++counters_.truss_edges_removed;
                remove_edge_into(aw, th.tau_v, batch);
                pending.insert(pending.end(), batch.begin(), batch.end());
            }
        }
    }

    const Graph* g_;
    std::vector<char> vertex_alive_;
    std::vector<char> edge_alive_;
    std::vector<int> degree_;
    std::vector<int> triangles_;    // A1
    std::vector<Tick> counted_at_;  // A2
    std::vector<Tick> removed_at_;  // A3
    Tick tick_ = 0;
    int alive_vertices_ = 0;
    int alive_edges_ = 0;
    bool counts_materialized_ = false;
    bool core_valid_ = false;
    int last_tau_v_ = 0;
    std::vector<int> touched_;
    ReductionCounters counters_;
};

/// Free-function spellings of the state operations.
inline std::vector<int> core_prune(ReductionState& state, int tau_v) { return state.core_prune(tau_v); }
inline std::vector<int> remove_edge(ReductionState& state, int e, int tau_v) { return state.remove_edge(e, tau_v); }
inline void cf_ctcp(ReductionState& state, std::span<const int> q_v, Thresholds th, bool lb_changed) {
    state.cf_ctcp(q_v, th, lb_changed);
}

/// Reference fixpoint: alternately drop every vertex of degree <= tau_v and
/// every edge with <= tau_e common neighbors, recomputing from scratch each
/// round, until nothing changes.
inline AliveSets naive_ctcp(const Graph& g, int tau_v, int tau_e) {
    AliveSets s{std::vector<char>(static_cast<std::size_t>(g.n()), 1), std::vector<char>(static_cast<std::size_t>(g.m()), 1)};
    auto alive_degree = [&](int v) {
        int d = 0;
        for (int e : g.incident_edges(v)) d += s.edges[e];
        return d;
    };
    auto alive_common = [&](int e) {
        auto [u, v] = g.endpoints(e);
        int c = 0;
        for (int w : g.neighbors(u)) {
            const int uw = g.edge_id(u, w), vw = g.edge_id(v, w);
            if (vw >= 0 && s.edges[uw] && s.edges[vw]) ++c;
        }
        return c;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> drop_v;
        for (int v = 0; v < g.n(); ++v)
            if (s.vertices[v] && alive_degree(v) <= tau_v) drop_v.push_back(v);
        for (int v : drop_v) {
            s.vertices[v] = 0;
            for (int e : g.incident_edges(v)) s.edges[e] = 0;
            changed = true;
        }
        std::vector<int> drop_e;
        for (int e = 0; e < g.m(); ++e)
            if (s.edges[e] && alive_common(e) <= tau_e) drop_e.push_back(e);
        for (int e : drop_e) {
            s.edges[e] = 0;
            changed = true;
        }
    }
    return s;
}

}  // namespace kplex
