#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "kplex/graph.hpp"

namespace kplex {

/// Pivot score |N̄(u, C)| / (k - |N̄(u, S)|) kept as an exact fraction.
/// A zero denominator means u is saturated: the score is +inf when it still
/// has non-neighbors in C and 0 otherwise.
struct PivotRatio {
    int num = 0;
    int den = 1;

    static PivotRatio make(int num, int den) {
        assert(den >= 0);
        if (den == 0 && num == 0) return {0, 1};
        return {num, den};
    }
    bool infinite() const noexcept { return den == 0; }
    bool exceeds_one() const noexcept { return infinite() || num > den; }

    friend bool operator>(PivotRatio a, PivotRatio b) noexcept {
        if (a.infinite()) return !b.infinite();
        if (b.infinite()) return false;
        return static_cast<std::int64_t>(a.num) * b.den > static_cast<std::int64_t>(b.num) * a.den;
    }
};

/// Bucket decomposition behind compute_ub: buckets[i] holds the non-neighbors
/// of pivots[i] among candidates not claimed by earlier pivots; rest is Π_0.
struct UBPartition {
    std::vector<int> pivots;
    std::vector<VertexSet> buckets;
    std::vector<int> caps;  // k - |N̄(pivot, S_full)|
    VertexSet rest;
    int bound = 0;
};

namespace detail {

template <class OnBucket>
int partition_bound(const DenseGraph& g, const VertexSet& s_full, const VertexSet& s_part, const VertexSet& c_part,
                    int k, OnBucket&& on_bucket, VertexSet* rest_out) {
    struct Pivot {
        int v;
        int cap;
    };
    std::vector<Pivot> pivots;
    s_part.for_each([&](int u) {
        const int cap = k - g.non_neighbors_in(u, s_full);
        assert(cap >= 0);
        pivots.push_back({u, std::max(cap, 0)});
    });

    VertexSet remaining = c_part;
    int remaining_size = remaining.count();
    int bound = 0;
    while (!pivots.empty() && remaining_size > 0) {
        std::size_t best = 0;
        PivotRatio best_ratio;
        int best_num = -1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const int num = remaining.difference_count(g.row(pivots[i].v));
            const auto r = PivotRatio::make(num, pivots[i].cap);
            if (best_num < 0 || r > best_ratio) {
                best = i;
                best_ratio = r;
                best_num = num;
            }
        }
        VertexSet bucket = remaining - g.row(pivots[best].v);
        bound += std::min(best_num, pivots[best].cap);
        remaining -= bucket;
        remaining_size -= best_num;
        on_bucket(pivots[best].v, std::move(bucket), pivots[best].cap);
        pivots.erase(pivots.begin() + static_cast<std::ptrdiff_t>(best));
    }
    // Pivots left over once the candidates run out own empty buckets.
    for (const auto& p : pivots) on_bucket(p.v, g.empty_set(), p.cap);
    if (rest_out) *rest_out = remaining;
    return bound + remaining_size;
}

}  // namespace detail

/// Upper bound on |C_part ∩ H| over every k-plex H ⊇ S_full, using the
/// vertices of S_part as pivots. Pivots are taken greedily by largest ratio,
/// ties to the smallest id.
inline int compute_ub(const DenseGraph& g, const VertexSet& s_full, const VertexSet& s_part, const VertexSet& c_part,
                      int k) {
    return detail::partition_bound(g, s_full, s_part, c_part, k, [](int, VertexSet&&, int) {}, nullptr);
}

inline UBPartition compute_ub_partition(const DenseGraph& g, const VertexSet& s_full, const VertexSet& s_part,
                                        const VertexSet& c_part, int k) {
    UBPartition p;
    p.bound = detail::partition_bound(
        g, s_full, s_part, c_part, k,
        [&](int v, VertexSet&& bucket, int cap) {
            p.pivots.push_back(v);
            p.buckets.push_back(std::move(bucket));
            p.caps.push_back(cap);
        },
        &p.rest);
    return p;
}

/// Two-sided split of a branch. The L side gathers the partial-solution
/// vertices with many missing edges into C together with those non-neighbors.
struct PartitionedBranch {
    VertexSet s_left, s_right, c_left, c_right;
    int ub_left = 0, ub_right = 0;
    int lb_left = 0, lb_right = 0;
};

/// Moves the highest-ratio vertex of S (with its non-neighbors in the
/// remaining C) to the left side until the best ratio is at most 1. Ratios
/// use the full S for the denominator, which makes compute_ub on the right
/// side collapse to |C_R|.
inline PartitionedBranch greedy_partition(const DenseGraph& g, const VertexSet& s, const VertexSet& c, int k) {
    PartitionedBranch pb{g.empty_set(), g.empty_set(), g.empty_set(), g.empty_set()};
    VertexSet s_rest = s;
    VertexSet c_rest = c;
    std::vector<int> cap(static_cast<std::size_t>(g.n()), 0);
    s.for_each([&](int u) { cap[u] = std::max(k - g.non_neighbors_in(u, s), 0); });

    while (!s_rest.empty()) {
        int best = -1;
        PivotRatio best_ratio;
        s_rest.for_each([&](int u) {
            const auto r = PivotRatio::make(c_rest.difference_count(g.row(u)), cap[u]);
            if (best < 0 || r > best_ratio) {
                best = u;
                best_ratio = r;
            }
        });
        if (!best_ratio.exceeds_one()) break;
        const VertexSet moved = c_rest - g.row(best);
        pb.s_left.set(static_cast<std::size_t>(best));
        pb.c_left |= moved;
        s_rest.reset(static_cast<std::size_t>(best));
        c_rest -= moved;
    }
    pb.s_right = std::move(s_rest);
    pb.c_right = std::move(c_rest);
    pb.ub_left = pb.c_left.count();
    pb.ub_right = pb.c_right.count();
    return pb;
}

}  // namespace kplex
