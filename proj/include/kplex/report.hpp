#pragma once

#include <string>

#include "json.hpp"
#include "kplex/graph.hpp"
#include "kplex/search.hpp"

namespace kplex {

/// Input columns echoed for benchmark scripts.
struct GraphSummary {
    int n = 0;
    int m = 0;
    double density = 0.0;
    int d_max = 0;
    int degeneracy = 0;

    static GraphSummary of(const Graph& g) {
        return {g.n(), g.m(), g.density(), g.max_degree(), degeneracy_order(g).delta};
    }
};

struct RunReport {
    GraphSummary input;
    int k = 0;
    Mode mode = Mode::exact_altrb;
    double time_limit_s = 0.0;
    Solution solution;
    double wall_ms = 0.0;
};

/// Fixed key order: the documented keys first, then the extended counters.
inline nlohmann::ordered_json to_json(const RunReport& r) {
    const Stats& st = r.solution.stats;
    nlohmann::ordered_json j;
    j["n"] = r.input.n;
    j["m"] = r.input.m;
    j["k"] = r.k;
    j["mode"] = std::string(to_string(r.mode));
    j["status"] = std::string(to_string(r.solution.status));
    j["size"] = r.solution.size;
    j["branches"] = st.branches;
    j["mean_r"] = st.mean_r();
    j["lb_initial"] = st.lb_initial;
    j["lb_final"] = st.lb_final;
    j["t_heuristic_ms"] = st.t_heuristic_ms;
    j["t_reduce_ms"] = st.t_reduce_ms;
    j["t_search_ms"] = st.t_search_ms;
    j["t_total_ms"] = st.t_total_ms;

    j["density"] = r.input.density;
    j["d_max"] = r.input.d_max;
    j["degeneracy"] = r.input.degeneracy;
    j["time_limit_s"] = r.time_limit_s;
    j["wall_ms"] = r.wall_ms;
    j["witness"] = r.solution.labels;
    j["subproblems"] = st.subproblems;
    j["altrb_calls"] = st.altrb_calls;
    j["altrb_iterations"] = st.altrb_iterations;
    j["prefilter_removed"] = st.prefilter_removed;
    j["rr1_removed"] = st.rr1_removed;
    j["rr2_moved"] = st.rr2_moved;
    j["rr2_terminated"] = st.rr2_terminated;
    j["heuristic_probes"] = st.heuristic_probes;
    j["ctcp_invocations"] = st.reduction.invocations;
    j["ctcp_vertices_removed"] = st.reduction.vertices_removed;
    j["ctcp_edges_removed"] = st.reduction.edges_removed;
    j["ctcp_truss_edges_removed"] = st.reduction.truss_edges_removed;
    j["ctcp_triangle_counts"] = st.reduction.triangle_counts;
    j["ctcp_triangle_updates"] = st.reduction.triangle_updates;
    return j;
}

}  // namespace kplex
