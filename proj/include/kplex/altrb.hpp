#pragma once

#include <algorithm>
#include <vector>

#include "kplex/bounds.hpp"
#include "kplex/graph.hpp"

namespace kplex {

enum class Side { left, right };

struct RBOutcome {
    VertexSet s;           // partial solution, possibly grown by RR2
    VertexSet candidates;  // refined C*
    int ub = 0;            // UB*: bound on the largest k-plex in the branch
    bool terminated = false;
    int iterations = 0;  // passes over the bound/reduce loop (at least 1)
    int rr1_removed = 0;
    int rr2_moved = 0;
};

/// Candidate filters that depend only on the incumbent size: drop v when
/// S ∪ {v} is not a k-plex, then (to a fixpoint) when v has fewer than
/// best_size + 1 - k neighbors in S ∪ C.
inline VertexSet candidate_filter(const DenseGraph& g, const VertexSet& s, const VertexSet& c, int k, int best_size) {
    const int s_size = s.count();
    VertexSet saturated = g.empty_set();
    s.for_each([&](int u) {
        if (g.non_neighbors_in(u, s) >= k) saturated.set(static_cast<std::size_t>(u));
    });
    VertexSet out = c;
    c.for_each([&](int v) {
        const bool fits = s_size + 1 - g.degree_in(v, s) <= k && saturated.is_subset_of(g.row(v));
        if (!fits) out.reset(static_cast<std::size_t>(v));
    });
    const int need = best_size + 1 - k;
    bool changed = true;
    while (changed) {
        changed = false;
        const VertexSet pool = s | out;
        out.for_each([&](int v) {
            if (g.degree_in(v, pool) < need) {
                out.reset(static_cast<std::size_t>(v));
                changed = true;
            }
        });
    }
    return out;
}

namespace detail {
inline void refresh_lower_bounds(PartitionedBranch& pb, int s_size, int best_size) {
    pb.lb_left = best_size + 1 - s_size - pb.ub_right;
    pb.lb_right = best_size + 1 - s_size - pb.ub_left;
}
}  // namespace detail

/// Degree-threshold rule on one side, iterated until no vertex qualifies.
/// Negative lower bounds are treated as 0. Returns the removed vertices.
inline VertexSet rr1(const DenseGraph& g, PartitionedBranch& pb, const VertexSet& s, int k, Side side) {
    const int s_size = s.count();
    const int lb_l = std::max(pb.lb_left, 0);
    const int lb_r = std::max(pb.lb_right, 0);
    // Required neighbors in S ∪ C_L and in S ∪ C_R for a vertex on `side`.
    const int need_left = lb_l + s_size - k + (side == Side::right ? 1 : 0);
    const int need_right = lb_r + s_size - k + (side == Side::left ? 1 : 0);

    VertexSet& target = side == Side::left ? pb.c_left : pb.c_right;
    VertexSet removed = g.empty_set();
    bool changed = true;
    while (changed) {
        changed = false;
        const VertexSet with_left = s | pb.c_left;
        const VertexSet with_right = s | pb.c_right;
        target.for_each([&](int v) {
            if (g.degree_in(v, with_left) < need_left || g.degree_in(v, with_right) < need_right) {
                target.reset(static_cast<std::size_t>(v));
                removed.set(static_cast<std::size_t>(v));
                changed = true;
            }
        });
    }
    return removed;
}

enum class RR2Result { no_op, moved, terminated };

/// Forced inclusion: when the bounds are exactly one above the incumbent and
/// the side's bound equals its size, every candidate of that side is in any
/// improving k-plex. Moves them into S if that stays a k-plex, otherwise the
/// branch is dead.
inline RR2Result rr2(const DenseGraph& g, PartitionedBranch& pb, VertexSet& s, int k, int best_size, Side side) {
    VertexSet& cands = side == Side::left ? pb.c_left : pb.c_right;
    int& ub_side = side == Side::left ? pb.ub_left : pb.ub_right;
    const int s_size = s.count();
    if (pb.ub_left + pb.ub_right + s_size != best_size + 1) return RR2Result::no_op;
    const int size = cands.count();
    if (ub_side != size || size == 0) return RR2Result::no_op;
    VertexSet grown = s | cands;
    if (!is_kplex(g, grown, k)) return RR2Result::terminated;
    s = std::move(grown);
    (side == Side::left ? pb.s_left : pb.s_right) |= cands;
    cands.clear();
    ub_side = 0;
    detail::refresh_lower_bounds(pb, s.count(), best_size);
    return RR2Result::moved;
}

/// Alternated reduction-and-bound over the greedy partition of (S, C).
/// Requires G[S] to be a k-plex and C ∩ S = ∅.
inline RBOutcome altrb(const DenseGraph& g, const VertexSet& s_in, const VertexSet& c_in, int k, int best_size) {
    RBOutcome out;
    out.s = s_in;
    auto& s = out.s;
    PartitionedBranch pb = greedy_partition(g, s, c_in, k);
    pb.ub_left = pb.c_left.count();
    pb.lb_left = 0;
    pb.ub_right = compute_ub(g, s, pb.s_right, pb.c_right, k);

    auto finish = [&](bool terminated) {
        out.candidates = pb.c_left | pb.c_right;
        out.ub = s.count() + pb.ub_left + pb.ub_right;
        out.terminated = terminated;
        if (terminated) out.ub = std::min(out.ub, best_size);
        out.iterations = std::max(out.iterations, 1);
        return out;
    };
    auto reduce = [&](Side side) {
        out.rr1_removed += rr1(g, pb, s, k, side).count();
        int& ub = side == Side::left ? pb.ub_left : pb.ub_right;
        ub = std::min(ub, (side == Side::left ? pb.c_left : pb.c_right).count());
        const auto r = rr2(g, pb, s, k, best_size, side);
        if (r == RR2Result::moved) ++out.rr2_moved;
        return r != RR2Result::terminated;
    };

    // UB_L as last used to derive LB_R. The loop runs while step 1 improves on it.
    int ub_left_used = pb.ub_left;
    while (true) {
        // Step 1: bound the left side. compute_ub is not monotone under
        // candidate removal for every pivot order, so keep the smaller value.
        const int ub_left = std::min(compute_ub(g, s, pb.s_left, pb.c_left, k), pb.ub_left);
        if (ub_left >= ub_left_used) break;
        ++out.iterations;
        pb.ub_left = ub_left_used = ub_left;
        if (s.count() + pb.ub_left + pb.ub_right <= best_size) break;

        // Step 2: reduce the right side.
        pb.lb_right = best_size + 1 - s.count() - pb.ub_left;
        if (!reduce(Side::right)) return finish(true);

        // Step 3: bound the right side.
        pb.ub_right = std::min(pb.ub_right, compute_ub(g, s, pb.s_right, pb.c_right, k));
        if (s.count() + pb.ub_left + pb.ub_right <= best_size) break;

        // Step 4: reduce the left side.
        pb.lb_left = best_size + 1 - s.count() - pb.ub_right;
        if (!reduce(Side::left)) return finish(true);
    }
    return finish(false);
}

/// Baseline: filter once on the incumbent, then bound the whole branch.
inline RBOutcome seqrb(const DenseGraph& g, const VertexSet& s, const VertexSet& c, int k, int best_size) {
    RBOutcome out;
    out.s = s;
    out.candidates = candidate_filter(g, s, c, k, best_size);
    out.ub = s.count() + compute_ub(g, s, s, out.candidates, k);
    out.iterations = 1;
    return out;
}

}  // namespace kplex
