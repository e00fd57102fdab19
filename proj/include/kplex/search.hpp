#pragma once

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kplex/altrb.hpp"
#include "kplex/graph.hpp"
#include "kplex/heuristic.hpp"
#include "kplex/oracle.hpp"
#include "kplex/reduction.hpp"

namespace kplex {

enum class Mode { exact_altrb, exact_seqrb, heuristic, oracle };

inline std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::exact_altrb: return "exact-altrb";
        case Mode::exact_seqrb: return "exact-seqrb";
        case Mode::heuristic: return "heuristic";
        case Mode::oracle: return "oracle";
    }
    return "?";
}

inline std::optional<Mode> parse_mode(std::string_view s) {
    for (Mode m : {Mode::exact_altrb, Mode::exact_seqrb, Mode::heuristic, Mode::oracle})
        if (to_string(m) == s) return m;
    return std::nullopt;
}

struct SolverConfig {
    int k = 2;
    double time_limit_s = 3600.0;
    Mode mode = Mode::exact_altrb;
    std::optional<int> lb_override;  // replaces the default 2k-2 floor when larger
};

enum class Status { found, none, timeout };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::found: return "found";
        case Status::none: return "none";
        case Status::timeout: return "timeout";
    }
    return "?";
}

struct Stats {
    std::int64_t branches = 0;
    std::int64_t subproblems = 0;
    std::int64_t altrb_calls = 0;
    std::int64_t altrb_iterations = 0;
    std::int64_t prefilter_removed = 0;
    std::int64_t rr1_removed = 0;
    std::int64_t rr2_moved = 0;
    std::int64_t rr2_terminated = 0;
    std::int64_t heuristic_probes = 0;
    ReductionCounters reduction;
    int lb_initial = 0;
    int lb_final = 0;
    double t_heuristic_ms = 0.0;
    double t_reduce_ms = 0.0;
    double t_search_ms = 0.0;
    double t_total_ms = 0.0;

    double mean_r() const noexcept {
        return altrb_calls == 0 ? 0.0 : static_cast<double>(altrb_iterations) / static_cast<double>(altrb_calls);
    }
};

struct Solution {
    Status status = Status::none;
    std::vector<int> vertices;   // input-graph ids, ascending
    std::vector<Label> labels;   // original labels, ascending
    int size = 0;
    Stats stats;
};

/// Everything a test needs to audit one bound-and-reduce call.
struct BranchEvent {
    const DenseGraph& graph;
    const VertexSet& s;         // branch as entered
    const VertexSet& c;
    const VertexSet& filtered;  // C after the incumbent-based filters
    const RBOutcome& outcome;
    int best_size;
    int k;
};
using BranchObserver = std::function<void(const BranchEvent&)>;

/// Pick the candidate with the fewest neighbors in S ∪ C, ties to the smallest id.
inline int select_branching_vertex(const DenseGraph& g, const VertexSet& s, const VertexSet& c) {
    const VertexSet pool = s | c;
    int best = -1, best_deg = 0;
    c.for_each([&](int v) {
        const int d = g.degree_in(v, pool);
        if (best < 0 || d < best_deg) {
            best = v;
            best_deg = d;
        }
    });
    return best;
}

/// Recursive branch-reduce-and-bound over one dense working graph. The
/// incumbent is shared with the caller through `best` (size and members in
/// local ids).
class BranchSearch {
public:
    using Clock = std::chrono::steady_clock;

    struct Incumbent {
        int size = 0;
        std::vector<int> members;  // empty when `size` is only a floor
    };

    BranchSearch(const DenseGraph& g, int k, Mode mode, Incumbent& best, Stats& stats,
                 std::optional<Clock::time_point> deadline = std::nullopt, const BranchObserver* observer = nullptr)
        : g_(g), k_(k), mode_(mode), best_(best), stats_(stats), deadline_(deadline), observer_(observer) {}

    bool timed_out() const noexcept { return timed_out_; }

    void run(const VertexSet& s, const VertexSet& c) {
        if (timed_out_) return;
        if (deadline_ && Clock::now() >= *deadline_) {
            timed_out_ = true;
            return;
        }
        ++stats_.branches;
        const int best_size = best_.size;

        RBOutcome rb;
        VertexSet filtered;
        if (mode_ == Mode::exact_seqrb) {
            rb = seqrb(g_, s, c, k_, best_size);
            filtered = rb.candidates;
        } else {
            filtered = candidate_filter(g_, s, c, k_, best_size);
            rb = altrb(g_, s, filtered, k_, best_size);
            ++stats_.altrb_calls;
            stats_.altrb_iterations += rb.iterations;
#ifndef NDEBUG
            assert(rb.ub <= s.count() + compute_ub(g_, s, s, filtered, k_));
            assert(rb.candidates.is_subset_of(filtered));
#endif
        }
        stats_.prefilter_removed += c.count() - filtered.count();
        stats_.rr1_removed += rb.rr1_removed;
        stats_.rr2_moved += rb.rr2_moved;
        if (rb.terminated) ++stats_.rr2_terminated;
        if (observer_ && *observer_) (*observer_)(BranchEvent{g_, s, c, filtered, rb, best_size, k_});

        if (rb.terminated || rb.ub <= best_size) return;
        VertexSet all = rb.s | rb.candidates;
        if (is_kplex(g_, all, k_)) {
            const int size = all.count();
            if (size > best_.size) {
                best_.size = size;
                best_.members = all.to_vector();
            }
            return;
        }
        const int v = select_branching_vertex(g_, rb.s, rb.candidates);
        VertexSet rest = rb.candidates;
        rest.reset(static_cast<std::size_t>(v));
        VertexSet with_v = rb.s;
        with_v.set(static_cast<std::size_t>(v));
        // RR2 may have grown S so that v no longer fits.
        if (is_kplex(g_, with_v, k_)) run(with_v, rest);
        run(rb.s, rest);
    }

private:
    const DenseGraph& g_;
    int k_;
    Mode mode_;
    Incumbent& best_;
    Stats& stats_;
    std::optional<Clock::time_point> deadline_;
    const BranchObserver* observer_;
    bool timed_out_ = false;
};

/// Solves branch (S, C) of g from the incumbent `best`, updating it in place.
inline void brb_rec(const DenseGraph& g, const VertexSet& s, const VertexSet& c, int k,
                    BranchSearch::Incumbent& best, Stats& stats, Mode mode = Mode::exact_altrb) {
    BranchSearch(g, k, mode, best, stats).run(s, c);
}

namespace detail {
inline Solution finish_solution(const Graph& g, std::vector<int> members, int floor, Status timeout_or_done) {
    Solution sol;
    std::sort(members.begin(), members.end());
    const bool found = !members.empty() && static_cast<int>(members.size()) > floor;
    if (found) {
        sol.vertices = std::move(members);
        sol.size = static_cast<int>(sol.vertices.size());
        for (int v : sol.vertices) sol.labels.push_back(g.label(v));
        std::sort(sol.labels.begin(), sol.labels.end());
    }
    sol.status = timeout_or_done == Status::timeout ? Status::timeout : (found ? Status::found : Status::none);
    return sol;
}
}  // namespace detail

/// Maximum k-plex with at least 2k-1 vertices (or more than lb_override).
/// Throws std::invalid_argument for k < 2 and InstanceTooLarge from the
/// oracle mode.
inline Solution kpex(const Graph& g, const SolverConfig& cfg, const BranchObserver* observer = nullptr) {
    using Clock = std::chrono::steady_clock;
    if (cfg.k < 2) throw std::invalid_argument("k must be at least 2");
    const int k = cfg.k;
    const auto t_start = Clock::now();
    auto ms_since = [](Clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    };
    const int floor = std::max(2 * k - 2, cfg.lb_override.value_or(0));

    if (cfg.mode == Mode::oracle) {
        const auto r = brute_max_kplex(g, k, floor + 1);
        Solution sol = detail::finish_solution(g, r.witness, floor, Status::found);
        sol.stats.lb_initial = floor;
        sol.stats.lb_final = std::max(floor, sol.size);
        sol.stats.t_total_ms = sol.stats.t_search_ms = ms_since(t_start);
        return sol;
    }

    std::optional<Clock::time_point> deadline;
    if (cfg.time_limit_s > 0)
        deadline = t_start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_limit_s));

    // Heuristic incumbent and co-pruning.
    auto heur = kpheuris(g, k, floor);
    Stats stats;
    stats.heuristic_probes = heur.probes;
    stats.t_reduce_ms = heur.reduce_ms;
    stats.t_heuristic_ms = ms_since(t_start) - heur.reduce_ms;
    stats.lb_initial = heur.lb;
    std::vector<int> best_members;
    if (heur.best_set.count() > floor) best_members = heur.best_set.to_vector();
    int lb = heur.lb;

    ReductionState& state = heur.reduced;
    bool timed_out = false;
    if (cfg.mode != Mode::heuristic) {
        const auto t_search = Clock::now();
        double reduce_ms = 0.0;
        using Entry = std::pair<int, int>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        for (int v : state.alive_vertex_list()) heap.emplace(state.degree(v), v);
        state.take_touched();
        std::vector<char> mark(static_cast<std::size_t>(g.n()), 0);
        std::vector<int> scratch(static_cast<std::size_t>(g.n()), -1);
        auto alive_edge = [&](int e) { return state.edge_alive(e); };

        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (!state.vertex_alive(v) || d != state.degree(v)) continue;
            if (deadline && Clock::now() >= *deadline) {
                timed_out = true;
                break;
            }
            const auto hood = two_hop_list(g, v, alive_edge, mark);
            const int lb_before = lb;
            if (static_cast<int>(hood.size()) > lb) {
                ++stats.subproblems;
                const DenseGraph sub = dense_induced_on(g, hood, alive_edge, scratch);
                BranchSearch::Incumbent best{lb, {}};
                BranchSearch search(sub, k, cfg.mode, best, stats, deadline, observer);
                VertexSet s = sub.empty_set(), c = VertexSet::full(hood.size());
                s.set(0);
                c.reset(0);
                search.run(s, c);
                if (best.size > lb) {
                    lb = best.size;
                    best_members.clear();
                    for (int i : best.members) best_members.push_back(hood[i]);
                }
                if (search.timed_out()) {
                    timed_out = true;
                    break;
                }
            }
            const auto t_red = Clock::now();
            const int q[] = {v};
            state.cf_ctcp(q, Thresholds::from_lower_bound(lb, k), lb > lb_before);
            reduce_ms += ms_since(t_red);
            for (int u : state.take_touched())
                if (state.vertex_alive(u)) heap.emplace(state.degree(u), u);
        }
        stats.t_reduce_ms += reduce_ms;
        stats.t_search_ms = ms_since(t_search) - reduce_ms;
    }

    Solution sol = detail::finish_solution(g, std::move(best_members), floor, timed_out ? Status::timeout : Status::found);
    stats.reduction = state.counters();
    stats.lb_final = lb;
    stats.t_total_ms = ms_since(t_start);
    sol.stats = stats;
    return sol;
}

}  // namespace kplex
