#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kplex/graph.hpp"

namespace kplex {

/// Raised when an exhaustive search is asked to handle more than kOracleLimit vertices.
class InstanceTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr int kOracleLimit = 25;

struct OracleResult {
    int optimum_size = 0;     // 0 when nothing reaches min_size
    std::vector<int> witness;  // ascending
};

namespace detail {

// Exhaustive k-plex enumeration over <= 25 vertices held as bitmasks. The only
// pruning is heredity: a set that is not a k-plex has no k-plex superset.
class MaskEnumerator {
public:
    MaskEnumerator(std::vector<std::uint32_t> adj, int k) : adj_(std::move(adj)), k_(k) {}

    bool is_kplex(std::uint32_t set) const {
        const int size = std::popcount(set);
        for (std::uint32_t rest = set; rest; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if (std::popcount(adj_[u] & set) < size - k_) return false;
        }
        return true;
    }

    /// Visits every k-plex H with base ⊆ H ⊆ base ∪ pool (base must be a k-plex).
    template <class F>
    void for_each(std::uint32_t base, std::uint32_t pool, F&& f) const {
        f(base);
        extend(base, pool, f);
    }

private:
    template <class F>
    void extend(std::uint32_t cur, std::uint32_t pool, F& f) const {
        for (std::uint32_t rest = pool; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const std::uint32_t next = cur | (std::uint32_t{1} << v);
            if (!is_kplex(next)) continue;
            f(next);
            // Only larger-indexed vertices, so each set is produced once.
            extend(next, rest & ~((std::uint32_t{1} << v) | ((std::uint32_t{1} << v) - 1)), f);
        }
    }

    std::vector<std::uint32_t> adj_;
    int k_;
};

}  // namespace detail

/// Largest k-plex of g with at least min_size vertices, by enumeration.
inline OracleResult brute_max_kplex(const Graph& g, int k, int min_size) {
    if (g.n() > kOracleLimit)
        throw InstanceTooLarge("oracle supports at most " + std::to_string(kOracleLimit) + " vertices, got " +
                               std::to_string(g.n()));
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n()), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    const detail::MaskEnumerator en(std::move(adj), k);
    const std::uint32_t all = (std::uint32_t{1} << g.n()) - 1;
    std::uint32_t best = 0;
    int best_size = -1;
    en.for_each(0, all, [&](std::uint32_t h) {
        const int size = std::popcount(h);
        if (size > best_size) {
            best_size = size;
            best = h;
        }
    });
    OracleResult r;
    if (best_size < min_size) return r;
    r.optimum_size = best_size;
    for (std::uint32_t rest = best; rest; rest &= rest - 1) r.witness.push_back(std::countr_zero(rest));
    return r;
}

/// Every H with S ⊆ H ⊆ S ∪ C, G[H] a k-plex and |H| >= min_size.
inline std::vector<VertexSet> enumerate_branch_kplexes(const DenseGraph& g, const VertexSet& s, const VertexSet& c,
                                                       int k, int min_size) {
    const VertexSet pool = s | c;
    const std::vector<int> ids = pool.to_vector();
    if (static_cast<int>(ids.size()) > kOracleLimit)
        throw InstanceTooLarge("branch has " + std::to_string(ids.size()) + " vertices");
    std::vector<std::uint32_t> adj(ids.size(), 0);
    std::uint32_t base = 0, free = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = 0; j < ids.size(); ++j)
            if (g.adjacent(ids[i], ids[j])) adj[i] |= std::uint32_t{1} << j;
        (s.test(static_cast<std::size_t>(ids[i])) ? base : free) |= std::uint32_t{1} << i;
    }
    std::vector<VertexSet> out;
    const detail::MaskEnumerator en(std::move(adj), k);
    if (!en.is_kplex(base)) return out;
    en.for_each(base, free, [&](std::uint32_t h) {
        if (std::popcount(h) < min_size) return;
        VertexSet set = g.empty_set();
        for (std::uint32_t rest = h; rest; rest &= rest - 1) set.set(static_cast<std::size_t>(ids[std::countr_zero(rest)]));
        out.push_back(std::move(set));
    });
    return out;
}

}  // namespace kplex
