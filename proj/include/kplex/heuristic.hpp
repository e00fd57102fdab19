#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <vector>

#include "kplex/graph.hpp"
#include "kplex/reduction.hpp"

namespace kplex {

/// Greedy insertion along the reversed degeneracy order; the result is a
/// maximal k-plex of g.
inline VertexSet degen_greedy(const Graph& g, int k) {
    const auto deg = degeneracy_order(g);
    VertexSet s(static_cast<std::size_t>(g.n()));
    std::vector<int> members;
    // missing[u] = |N̄(u, S)| for u ∈ S, counting u itself.
    std::vector<int> missing(static_cast<std::size_t>(g.n()), 0);
    std::vector<char> adjacent(static_cast<std::size_t>(g.n()), 0);
    int saturated = 0;  // members with missing == k

    for (auto it = deg.order.rbegin(); it != deg.order.rend(); ++it) {
        const int v = *it;
        int inside = 0, saturated_nbrs = 0;
        for (int w : g.neighbors(v)) {
            if (!s.test(static_cast<std::size_t>(w))) continue;
            ++inside;
            adjacent[w] = 1;
            if (missing[w] == k) ++saturated_nbrs;
        }
        const int v_missing = static_cast<int>(members.size()) + 1 - inside;
        const bool ok = v_missing <= k && saturated_nbrs == saturated;
        if (ok) {
            for (int u : members) {
                if (adjacent[u]) continue;
                if (++missing[u] == k) ++saturated;
            }
            missing[v] = v_missing;
            if (v_missing == k) ++saturated;
            s.set(static_cast<std::size_t>(v));
            members.push_back(v);
        }
        for (int w : g.neighbors(v)) adjacent[w] = 0;
    }
    return s;
}

struct HeuristicOutcome {
    VertexSet best_set;      // over the input graph's ids
    int lb = 0;              // max(|best_set|, floor)
    ReductionState reduced;  // input graph after co-pruning with the final lb
    DegeneracyResult order;  // degeneracy order of the input graph
    std::int64_t probes = 0;  // subgraphs handed to degen_greedy
    double reduce_ms = 0.0;   // time spent inside cf_ctcp
};

/// Degen on the whole graph, co-pruning, then Degen on every surviving
/// vertex's forward two-hop subgraph, re-pruning whenever lb improves.
/// `lb_floor` seeds the lower bound (e.g. 2k-2) without a witness.
inline HeuristicOutcome kpheuris(const Graph& g, int k, int lb_floor = 0) {
    using Clock = std::chrono::steady_clock;
    auto ms_since = [](Clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    };

    HeuristicOutcome out{degen_greedy(g, k), 0, ReductionState(g), degeneracy_order(g), 0, 0.0};
    int best = out.best_set.count();
    out.lb = std::max(best, lb_floor);

    auto prune = [&](bool lb_changed) {
        const auto t0 = Clock::now();
        out.reduced.cf_ctcp({}, Thresholds::from_lower_bound(out.lb, k), lb_changed);
        out.reduce_ms += ms_since(t0);
    };
    prune(true);

    auto& state = out.reduced;
    std::vector<char> mark(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> scratch(static_cast<std::size_t>(g.n()), -1);
    auto alive_edge = [&](int e) { return state.edge_alive(e); };
    for (int v : out.order.order) {
        if (!state.vertex_alive(v)) continue;
        const int pos = out.order.position[v];
        auto hood = two_hop_list(g, v, alive_edge, mark);
        std::erase_if(hood, [&](int u) { return out.order.position[u] < pos; });
        if (static_cast<int>(hood.size()) <= best) continue;
        ++out.probes;
        const Graph sub = induced_on(g, hood, alive_edge, scratch);
        const VertexSet local = degen_greedy(sub, k);
        const int size = local.count();
        if (size <= best) continue;
        best = size;
        out.best_set = VertexSet(static_cast<std::size_t>(g.n()));
        local.for_each([&](int i) { out.best_set.set(static_cast<std::size_t>(hood[i])); });
        if (best > out.lb) {
            out.lb = best;
            prune(true);
        }
    }
    return out;
}

inline HeuristicOutcome kpheuris(Graph&&, int, int = 0) = delete;

}  // namespace kplex
